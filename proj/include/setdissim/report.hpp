#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "setdissim/verify.hpp"

namespace setdissim {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

enum class Format { json, csv, markdown, plain };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "markdown" || s == "md") return Format::markdown;
    if (s == "plain" || s == "text") return Format::plain;
    throw std::invalid_argument("unknown format '" + s + "'");
}

// ---------------------------------------------------------------------------
// Decimal approximation
// ---------------------------------------------------------------------------

namespace detail {

inline BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

inline long digit_count(const BigInt& n) { return static_cast<long>(n.str().size()); }

}  // namespace detail

/// `q` rounded to `digits` significant digits, fixed notation.
inline std::string approx_decimal(const Rat& q, int digits = 6) {
    if (q.is_zero()) return "0";
    BigInt num = q.num();
    const BigInt den = q.den();
    bool negative = num < 0;
    if (negative) num = -num;
    const BigInt limit = detail::pow10(digits);
    long s = digits - 1 - (detail::digit_count(num) - detail::digit_count(den));
    BigInt n;
    for (;;) {
        BigInt top = num, bottom = den;
        if (s >= 0) top *= detail::pow10(s);
        else bottom *= detail::pow10(-s);
        n = (2 * top + bottom) / (2 * bottom);  // round half up
        if (n >= limit) --s;
        else if (n < limit / 10) ++s;
        else break;
    }
    std::string d = n.str();
    std::string out;
    if (s <= 0) {
        out = d + std::string(static_cast<std::size_t>(-s), '0');
    } else if (static_cast<std::size_t>(s) >= d.size()) {
        out = "0." + std::string(static_cast<std::size_t>(s) - d.size(), '0') + d;
    } else {
        out = d.substr(0, d.size() - static_cast<std::size_t>(s)) + "." + d.substr(d.size() - static_cast<std::size_t>(s));
    }
    return negative ? "-" + out : out;
}

inline std::string approx_decimal(const Value& v, int digits = 6) {
    if (v.is_rational()) return approx_decimal(v.rational(), digits);
    if (auto exact = detail::exact_sqrt(v.base())) return approx_decimal(*exact, digits);
    return approx_decimal(detail::sqrt_bounds(v.base(), 96).first, digits);
}

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

inline Json labels_json(const FiniteSet& s) {
    Json arr = Json::array();
    for (auto id : s) arr.push_back(default_label(id));
    return arr;
}

inline std::string set_str(const FiniteSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto id : s) {
        if (!first) out += ",";
        out += default_label(id);
        first = false;
    }
    return out + "}";
}

inline Json to_json(const Bounds& b) {
    return Json{{"universe_size", b.universe_size},
                {"max_card", b.max_card},
                {"max_replication", b.max_replication},
                {"triple_max_card", b.triple_max_card},
                {"neutrality_cap", b.neutrality_cap}};
}

inline Json to_json(const Witness& w) {
    Json j;
    if (w.branch) j["case"] = w.branch;
    Json sets = Json::object();
    for (const auto& [name, s] : w.sets) sets[name] = labels_json(s);
    j["sets"] = sets;
    if (!w.elements.empty()) {
        Json el = Json::object();
        for (const auto& [role, id] : w.elements) el[role] = default_label(id);
        j["elements"] = el;
    }
    Json values = Json::array();
    for (const auto& [term, v] : w.terms) values.push_back(Json{{"term", term}, {"value", v.str()}});
    j["values"] = values;
    j["relation"] = w.relation;
    return j;
}

/// One line, e.g. "A={a},B={b},c=c: I(A∪{c},B∪{c})=2/3, I(A,B)=1".
inline std::string witness_str(const Witness& w) {
    std::string out;
    if (w.branch) out += "case " + std::to_string(w.branch) + ": ";
    bool first = true;
    for (const auto& [name, s] : w.sets) {
        out += (first ? "" : ",") + name + "=" + set_str(s);
        first = false;
    }
    for (const auto& [role, id] : w.elements) {
        out += (first ? "" : ",") + std::string(role) + "=" + default_label(id);
        first = false;
    }
    out += ": ";
    first = true;
    for (const auto& [term, v] : w.terms) {
        out += (first ? "" : ", ") + term + "=" + v.str();
        first = false;
    }
    return out;
}

inline Json to_json(const CheckResult& r) {
    Json j;
    j["axiom"] = r.axiom.name();
    j["fn"] = r.fn_id;
    j["holds"] = r.holds;
    j["vacuous"] = r.vacuous;
    j["instances"] = r.instances;
    j["premise_instances"] = r.premise_count;
    if (r.effective_universe != r.bounds.universe_size) j["effective_universe"] = r.effective_universe;
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (!r.branches.empty()) {
        Json parts = Json::array();
        for (const auto& br : r.branches) {
            Json p;
            if (r.axiom.kind == Axiom::DIST_CONDITIONS) p["part"] = distance_condition_name(br.branch);
            else p["case"] = br.branch;
            p["holds"] = br.holds;
            p["vacuous"] = br.vacuous;
            if (br.witness) p["witness"] = to_json(*br.witness);
            parts.push_back(p);
        }
        j["parts"] = parts;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline Json envelope(const Bounds& b) {
    return Json{{"tool_version", kToolVersion}, {"bounds", to_json(b)}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

inline std::string bounds_line(const Bounds& b) {
    std::ostringstream os;
    os << "bounds: universe " << b.universe_size << ", max_card " << b.max_card << ", max_replication "
       << b.max_replication << ", triple_max_card " << b.triple_max_card;
    return os.str();
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

inline std::string render_checks(const std::vector<CheckResult>& results, const Bounds& bounds, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        Json j = envelope(bounds);
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        j["results"] = arr;
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"axiom", "fn", "holds", "vacuous", "instances", "witness"});
        for (const auto& r : results)
            os << detail::csv_row({r.axiom.name(), r.fn_id, r.holds ? "true" : "false", r.vacuous ? "true" : "false",
                                   std::to_string(r.instances), r.witness ? witness_str(*r.witness) : ""});
        break;
    case Format::markdown:
        os << "| axiom | fn | holds | vacuous | witness |\n|---|---|---|---|---|\n";
        for (const auto& r : results)
            os << "| " << r.axiom.name() << " | " << r.fn_id << " | " << detail::yes_no(r.holds) << " | "
               << detail::yes_no(r.vacuous) << " | " << (r.witness ? witness_str(*r.witness) : "") << " |\n";
        break;
    case Format::plain:
        os << detail::bounds_line(bounds) << "\n";
        for (const auto& r : results) {
            os << r.axiom.name() << " " << r.fn_id << ": " << (r.holds ? "holds" : "fails");
            if (r.vacuous) os << " (vacuous)";
            os << " [" << r.instances << " instances]\n";
            if (r.witness) os << "  witness " << witness_str(*r.witness) << "\n";
            for (const auto& br : r.branches) {
                os << "  " << (r.axiom.kind == Axiom::DIST_CONDITIONS ? distance_condition_name(br.branch)
                                                                     : "case " + std::to_string(br.branch))
                   << ": " << (br.holds ? "holds" : "fails") << (br.vacuous ? " (vacuous)" : "") << "\n";
            }
            for (const auto& n : r.notes) os << "  note: " << n << "\n";
        }
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Satisfaction table
// ---------------------------------------------------------------------------

inline char cell_mark(const TableCell& c) {
    if (c.state == CellState::vacuous) return 'v';
    if (c.state == CellState::not_satisfied) return '.';
    return c.characterizing ? 'X' : '+';
}

inline std::string render_table(const SatisfactionTable& t, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        Json j = envelope(t.bounds);
        j["ok"] = t.matches();
        Json arr = Json::array();
        for (const auto& c : t.cells) {
            Json cell = to_json(c.result);
            cell["state"] = to_string(c.state);
            cell["expected"] = c.expected_satisfied ? "satisfied" : "not_satisfied";
            cell["characterizing"] = c.characterizing;
            cell["matches"] = c.matches();
            if (c.state == CellState::not_satisfied) cell["witness_rechecked"] = c.witness_rechecked;
            if (c.first_witness_universe) cell["first_witness_universe"] = *c.first_witness_universe;
            arr.push_back(cell);
        }
        j["results"] = arr;
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"fn", "axiom", "state", "expected", "characterizing", "matches",
                               "first_witness_universe", "witness"});
        for (const auto& c : t.cells)
            os << detail::csv_row({c.fn_id, axiom_info(c.axiom).name, to_string(c.state),
                                   c.expected_satisfied ? "satisfied" : "not_satisfied",
                                   c.characterizing ? "true" : "false", c.matches() ? "true" : "false",
                                   c.first_witness_universe ? std::to_string(*c.first_witness_universe) : "",
                                   c.result.witness ? witness_str(*c.result.witness) : ""});
        break;
    case Format::markdown: {
        os << "| |";
        for (Axiom a : t.columns) os << " " << axiom_info(a).title << " |";
        os << "\n|---|";
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << ":-:|";
        os << "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            os << "| " << t.rows[r] << " |";
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                const auto& cell = t.at(r, c);
                std::string mark = cell.state == CellState::vacuous         ? "vacuous"
                                   : cell.state == CellState::not_satisfied ? ""
                                   : cell.characterizing                    ? "✗"
                                                                            : "✓";
                if (!cell.matches()) mark += " (!)";
                os << " " << mark << " |";
            }
            os << "\n";
        }
        os << "\n✗ characterizing, ✓ satisfied, empty not satisfied, (!) differs from the published table.\n";
        break;
    }
    case Format::plain: {
        os << detail::bounds_line(t.bounds) << "\n";
        os << "    ";
        for (Axiom a : t.columns) {
            std::string n = axiom_info(a).name;
            n.resize(5, ' ');
            os << n << " ";
        }
        os << "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            os << t.rows[r] << "   ";
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                const auto& cell = t.at(r, c);
                os << "  " << cell_mark(cell) << (cell.matches() ? ' ' : '!') << "  ";
            }
            os << "\n";
        }
        os << "X characterizing, + satisfied, . not satisfied, v vacuous, ! differs from the published table\n";
        for (const auto& c : t.cells)
            if (c.result.witness)
                os << c.fn_id << " " << axiom_info(c.axiom).name << ": " << witness_str(*c.result.witness) << "\n";
        auto mism = t.mismatches();
        os << (mism.empty() ? "matches the published table" : std::to_string(mism.size()) + " cell(s) differ") << "\n";
        break;
    }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Discrimination bullets
// ---------------------------------------------------------------------------

inline std::string render_discrimination(const DiscriminationReport& d, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        Json j = envelope(d.bounds);
        j["ok"] = d.holds();
        Json arr = Json::array();
        for (const auto& b : d.bullets) {
            Json per = Json::object();
            for (const auto& [fn, v] : b.per_fn) per[fn] = v;
            arr.push_back(Json{{"distance", b.distance}, {"statement", b.statement()}, {"holds", b.holds}, {"per_fn", per}});
        }
        j["results"] = arr;
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"distance", "statement", "H", "J", "S", "O", "holds"});
        for (const auto& b : d.bullets) {
            std::vector<std::string> row{b.distance, b.statement()};
            for (const auto& [fn, v] : b.per_fn) row.push_back(v ? "true" : "false");
            row.push_back(b.holds ? "true" : "false");
            os << detail::csv_row(row);
        }
        break;
    case Format::markdown:
        os << "| distance | statement | H | J | S | O | holds |\n|---|---|---|---|---|---|---|\n";
        for (const auto& b : d.bullets) {
            os << "| " << b.distance << " | " << b.statement() << " |";
            for (const auto& [fn, v] : b.per_fn) os << " " << (v ? "true" : "false") << " |";
            os << " " << detail::yes_no(b.holds) << " |\n";
        }
        break;
    case Format::plain:
        os << detail::bounds_line(d.bounds) << "\n";
        for (const auto& b : d.bullets) {
            os << b.distance << ": " << b.statement() << " ->";
            for (const auto& [fn, v] : b.per_fn) os << " " << fn << "=" << (v ? "T" : "F");
            os << (b.holds ? "  ok" : "  MISMATCH") << "\n";
        }
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Independence
// ---------------------------------------------------------------------------

inline std::string render_independence(const IndependenceReport& r, Format f) {
    std::ostringstream os;
    auto failing_str = [](const IndependenceCandidate& c) {
        std::string s;
        for (Axiom a : c.failing) s += (s.empty() ? "" : " ") + std::string(axiom_info(a).name);
        return s.empty() ? std::string("none") : s;
    };
    switch (f) {
    case Format::json: {
        Json j = envelope(r.bounds);
        j["set"] = r.theorem_id;
        j["title"] = r.title;
        Json axioms = Json::array();
        for (Axiom a : r.axiom_set) axioms.push_back(axiom_info(a).name);
        j["axioms"] = axioms;
        j["ok"] = r.valid();
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            Json cands = Json::array();
            for (const auto& c : row.candidates) {
                Json checks = Json::array();
                for (const auto& res : c.results) checks.push_back(to_json(res));
                Json failing = Json::array();
                for (Axiom a : c.failing) failing.push_back(axiom_info(a).name);
                cands.push_back(Json{{"fn", c.fn_id}, {"valid", c.valid}, {"failing", failing}, {"results", checks}});
            }
            rows.push_back(Json{{"target", axiom_info(row.target).name}, {"valid", row.valid}, {"candidates", cands}});
        }
        j["results"] = rows;
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"set", "target", "fn", "failing", "valid"});
        for (const auto& row : r.rows)
            for (const auto& c : row.candidates)
                os << detail::csv_row({r.theorem_id, axiom_info(row.target).name, c.fn_id, failing_str(c),
                                       c.valid ? "true" : "false"});
        break;
    case Format::markdown:
        os << "| target | fn | fails | valid |\n|---|---|---|---|\n";
        for (const auto& row : r.rows)
            for (const auto& c : row.candidates)
                os << "| " << axiom_info(row.target).name << " | " << c.fn_id << " | " << failing_str(c) << " | "
                   << detail::yes_no(c.valid) << " |\n";
        break;
    case Format::plain:
        os << r.theorem_id << " (" << r.title << "):";
        for (Axiom a : r.axiom_set) os << " " << axiom_info(a).name;
        os << "\n" << detail::bounds_line(r.bounds) << "\n";
        for (const auto& row : r.rows) {
            os << "  " << axiom_info(row.target).name << ":";
            for (const auto& c : row.candidates) os << " " << c.fn_id << " fails [" << failing_str(c) << "]";
            os << (row.valid ? "  ok" : "  MISMATCH") << "\n";
            for (const auto& c : row.candidates)
                for (const auto& res : c.results)
                    if (!res.holds && res.axiom.kind != row.target && res.witness)
                        os << "    " << c.fn_id << " " << res.axiom.name() << ": " << witness_str(*res.witness) << "\n";
        }
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Gamma scan
// ---------------------------------------------------------------------------

inline Json triple_json(const Triple& t) {
    return Json{{"A", labels_json(FiniteSet::from_mask(t.a))},
                {"B", labels_json(FiniteSet::from_mask(t.b))},
                {"C", labels_json(FiniteSet::from_mask(t.c))}};
}

inline std::string triple_str(const Triple& t) {
    return "A=" + set_str(FiniteSet::from_mask(t.a)) + ",B=" + set_str(FiniteSet::from_mask(t.b)) +
           ",C=" + set_str(FiniteSet::from_mask(t.c));
}

inline std::string render_gamma(const GammaScan& g, Format f) {
    std::ostringstream os;
    std::string ratio = g.max_ratio ? g.max_ratio->str() : "";
    switch (f) {
    case Format::json: {
        Json j = envelope(g.bounds);
        Json r;
        r["fn"] = g.fn_id;
        r["triples"] = g.triples;
        r["finite_gamma"] = !g.unbounded;
        if (g.max_ratio) r["max_ratio"] = ratio;
        if (g.witness) r["witness"] = triple_json(*g.witness);
        if (g.unbounded_witness) r["zero_denominator_witness"] = triple_json(*g.unbounded_witness);
        j["results"] = Json::array({r});
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"fn", "max_ratio", "witness", "finite_gamma", "zero_denominator_witness"});
        os << detail::csv_row({g.fn_id, ratio, g.witness ? triple_str(*g.witness) : "", g.unbounded ? "false" : "true",
                               g.unbounded_witness ? triple_str(*g.unbounded_witness) : ""});
        break;
    case Format::markdown:
        os << "| fn | max ratio | witness | finite γ |\n|---|---|---|---|\n";
        os << "| " << g.fn_id << " | " << ratio << " | " << (g.witness ? triple_str(*g.witness) : "") << " | "
           << (g.unbounded ? "no (" + triple_str(*g.unbounded_witness) + ")" : "yes") << " |\n";
        break;
    case Format::plain:
        os << detail::bounds_line(g.bounds) << "\n";
        os << g.fn_id << ": max_ratio " << (g.max_ratio ? ratio : "none") << " over " << g.triples << " triples\n";
        if (g.witness) os << "  witness " << triple_str(*g.witness) << "\n";
        if (g.unbounded) os << "  no finite γ: I(A,B) > 0 = I(A,C) + I(C,B) at " << triple_str(*g.unbounded_witness) << "\n";
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Ordering equivalence
// ---------------------------------------------------------------------------

inline std::string render_ordering(const OrderingEquivalence& e, Format f) {
    std::ostringstream os;
    auto pair_s = [](const std::pair<Mask, Mask>& p) {
        return "(" + set_str(FiniteSet::from_mask(p.first)) + "," + set_str(FiniteSet::from_mask(p.second)) + ")";
    };
    std::string wit;
    if (e.witness) {
        const auto& w = *e.witness;
        wit = pair_s(w.first) + " vs " + pair_s(w.second) + ": " + e.fn_a + " " + w.a_first.str() + " vs " +
              w.a_second.str() + ", " + e.fn_b + " " + w.b_first.str() + " vs " + w.b_second.str();
    }
    std::string twit;
    if (e.type_level && e.type_level->witness) {
        std::ostringstream t;
        t << e.type_level->witness->first << " vs " << e.type_level->witness->second;
        twit = t.str();
    }
    switch (f) {
    case Format::json: {
        Json j = envelope(e.bounds);
        Json r;
        r["fn_a"] = e.fn_a;
        r["fn_b"] = e.fn_b;
        r["equivalent"] = e.equivalent;
        r["pairs"] = e.pairs;
        r["set_level_equivalent"] = e.set_level_equivalent;
        if (e.witness) {
            const auto& w = *e.witness;
            r["witness"] = Json{{"first", Json{{"A", labels_json(FiniteSet::from_mask(w.first.first))},
                                               {"B", labels_json(FiniteSet::from_mask(w.first.second))}}},
                                {"second", Json{{"A", labels_json(FiniteSet::from_mask(w.second.first))},
                                                {"B", labels_json(FiniteSet::from_mask(w.second.second))}}},
                                {"fn_a_values", Json::array({w.a_first.str(), w.a_second.str()})},
                                {"fn_b_values", Json::array({w.b_first.str(), w.b_second.str()})}};
        }
        if (e.type_level) {
            r["type_level"] = Json{{"max_component", e.type_level->max_component},
                                   {"types", e.type_level->types},
                                   {"comparisons", e.type_level->comparisons},
                                   {"disagreements", e.type_level->disagreements}};
            if (!twit.empty()) r["type_level"]["witness"] = twit;
            r["levels_consistent"] = e.levels_consistent;
        }
        j["results"] = Json::array({r});
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"fn_a", "fn_b", "equivalent", "pairs", "type_disagreements", "witness"});
        os << detail::csv_row({e.fn_a, e.fn_b, e.equivalent ? "true" : "false", std::to_string(e.pairs),
                               e.type_level ? std::to_string(e.type_level->disagreements) : "", wit});
        break;
    case Format::markdown:
        os << "| fn_a | fn_b | equivalent | pairs | type disagreements | witness |\n|---|---|---|---|---|---|\n";
        os << "| " << e.fn_a << " | " << e.fn_b << " | " << detail::yes_no(e.equivalent) << " | " << e.pairs << " | "
           << (e.type_level ? std::to_string(e.type_level->disagreements) : "n/a") << " | " << wit << " |\n";
        break;
    case Format::plain:
        os << detail::bounds_line(e.bounds) << "\n";
        os << e.fn_a << " vs " << e.fn_b << ": " << (e.equivalent ? "equivalent" : "not equivalent") << " on "
           << e.pairs << " pairs\n";
        if (e.witness) os << "  witness " << wit << "\n";
        if (e.type_level)
            os << "  type level (components <= " << e.type_level->max_component << "): " << e.type_level->comparisons
               << " comparisons, " << e.type_level->disagreements << " disagreements" << (twit.empty() ? "" : ", e.g. " + twit)
               << "\n";
        if (!e.levels_consistent) os << "  set level and type level disagree\n";
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// General additivity and lemma consequences
// ---------------------------------------------------------------------------

inline std::string render_general_additivity(const GeneralAdditivityResult& g, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        Json j = envelope(g.bounds);
        Json passing = Json::array();
        for (const auto& d : g.passing) passing.push_back(d.str());
        j["results"] = Json::array({Json{{"fn", g.fn_id},
                                         {"candidates", g.candidates},
                                         {"equation_failures", g.equation_failures},
                                         {"trivial", g.trivial},
                                         {"passing", passing}}});
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"fn", "decomposition"});
        for (const auto& d : g.passing) os << detail::csv_row({g.fn_id, d.str()});
        break;
    case Format::markdown:
        os << "| fn | passing decompositions |\n|---|---|\n| " << g.fn_id << " | " << g.passing.size() << " |\n";
        for (const auto& d : g.passing) os << "\n- " << d.str();
        if (!g.passing.empty()) os << "\n";
        break;
    case Format::plain:
        os << detail::bounds_line(g.bounds) << "\n";
        os << g.fn_id << ": " << g.passing.size() << " of " << g.candidates << " decompositions pass ("
           << g.equation_failures << " fail the equation, " << g.trivial << " never have both terms positive)\n";
        for (const auto& d : g.passing) os << "  " << d.str() << "\n";
        break;
    }
    return os.str();
}

inline std::string render_lemmas(const std::vector<LemmaReport>& reports, const Bounds& bounds, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        Json j = envelope(bounds);
        Json arr = Json::array();
        for (const auto& r : reports) {
            Json rows = Json::array();
            for (const auto& row : r.rows) {
                Json x{{"fn", row.fn_id}, {"premise", row.premise}, {"conclusion", row.conclusion}};
                if (!row.detail.empty()) x["counterexample"] = row.detail;
                rows.push_back(x);
            }
            arr.push_back(Json{{"name", r.name}, {"statement", r.statement}, {"holds", r.holds()}, {"rows", rows}});
        }
        j["results"] = arr;
        os << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        os << detail::csv_row({"name", "fn", "premise", "conclusion", "counterexample"});
        for (const auto& r : reports)
            for (const auto& row : r.rows)
                os << detail::csv_row({r.name, row.fn_id, row.premise ? "true" : "false",
                                       row.conclusion ? "true" : "false", row.detail});
        break;
    case Format::markdown:
        os << "| statement | premise holds for | holds |\n|---|---|---|\n";
        for (const auto& r : reports)
            os << "| " << r.statement << " | " << r.premise_count() << " functions | " << detail::yes_no(r.holds())
               << " |\n";
        break;
    case Format::plain:
        os << detail::bounds_line(bounds) << "\n";
        for (const auto& r : reports) {
            os << r.statement << ": " << (r.holds() ? "holds" : "FAILS") << " (premise holds for "
               << r.premise_count() << " functions)\n";
            for (const auto& row : r.rows)
                if (row.premise && !row.conclusion) os << "  " << row.fn_id << ": " << row.detail << "\n";
        }
        break;
    }
    return os.str();
}

}  // namespace setdissim
