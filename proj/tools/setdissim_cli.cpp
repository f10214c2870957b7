// Command-line front end for the setdissim library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "setdissim/setdissim.hpp"

using namespace setdissim;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// "a,b,c" -> labels; "" -> empty set.
std::vector<std::string> split_labels(const std::string& text, const std::string& flag) {
    std::vector<std::string> out;
    if (trim(text).empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw UsageError(flag + ": empty label in '" + text + "'");
        for (const auto& seen : out)
            if (seen == item) throw UsageError(flag + ": duplicate label '" + item + "'");
        out.push_back(item);
    }
    return out;
}

FiniteSet intern_set(Universe& u, const std::vector<std::string>& labels) {
    std::vector<ElementId> ids;
    for (const auto& l : labels) ids.push_back(u.intern(l).id);
    return FiniteSet(std::move(ids));
}

/// Lines "label weight"; blank lines and '#' comments are skipped.
std::vector<std::pair<std::string, std::uint64_t>> read_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read weights file '" + path + "'");
    std::vector<std::pair<std::string, std::uint64_t>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string label, weight, extra;
        ls >> label >> weight;
        if (label.empty() || weight.empty() || (ls >> extra) ||
            weight.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'label weight' with a positive integer");
        for (const auto& [seen, w] : out)
            if (seen == label) throw UsageError(path + ":" + std::to_string(lineno) + ": label '" + label + "' repeated");
        out.emplace_back(label, std::stoull(weight));
    }
    return out;
}

WeightAssignment weights_for(const std::vector<std::pair<std::string, std::uint64_t>>& raw,
                             const std::function<std::optional<ElementId>(const std::string&)>& lookup) {
    std::unordered_map<ElementId, std::uint64_t> map;
    std::vector<std::uint64_t> all;
    for (const auto& [label, w] : raw) {
        all.push_back(w);
        if (auto id = lookup(label)) map[*id] = w;
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw UsageError("weights must be distinct positive integers");
    if (!all.empty() && all.front() == 0) throw UsageError("weights must be distinct positive integers");
    return WeightAssignment::from_map(std::move(map));
}

/// Labels of the enumeration universe are a, b, c, ...
std::optional<ElementId> enumeration_id(const std::string& label) {
    for (ElementId id = 0; id < kMaxMaskUniverse; ++id)
        if (default_label(id) == label) return id;
    return std::nullopt;
}

struct BoundsFlags {
    std::size_t universe = 8;
    std::size_t max_card = 4;
    std::size_t max_replication = 3;
    std::size_t triple_max_card = 2;

    void attach(CLI::App* app, bool triple_via_max_card = false) {
        app->add_option("--universe", universe, "Enumeration universe size (<= 64)");
        if (triple_via_max_card) {
            app->add_option("--max-card", triple_max_card, "Largest set in a triple");
        } else {
            app->add_option("--max-card", max_card, "Largest set in a pair");
            app->add_option("--triple-max-card", triple_max_card, "Largest set in a triple");
        }
        app->add_option("--max-replication", max_replication, "Largest replication factor");
    }

    Bounds bounds() const {
        Bounds b;
        b.universe_size = universe;
        b.max_card = std::min(max_card, universe);
        b.max_replication = max_replication;
        b.triple_max_card = triple_max_card;
        b.validate();
        return b;
    }
};

struct Common {
    std::string format = "plain";
    std::string weights_file;

    void attach(CLI::App* app, bool with_weights = true) {
        app->add_option("--format", format, "json, csv, markdown or plain")
            ->check(CLI::IsMember({"json", "csv", "markdown", "md", "plain", "text"}));
        if (with_weights) app->add_option("--weights", weights_file, "File of 'label weight' lines");
    }

    std::optional<WeightAssignment> enumeration_weights() const {
        if (weights_file.empty()) return std::nullopt;
        return weights_for(read_weights(weights_file), enumeration_id);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact set dissimilarities and bounded axiom verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    int status = kOk;

    // dist ------------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "Evaluate a dissimilarity exactly");
    std::string dist_fn, dist_a, dist_b;
    bool dist_a_empty = false, dist_b_empty = false, dist_approx = false;
    Common dist_common;
    dist->add_option("fn", dist_fn, "Function id or alias (hamming, jaccard, sorensen, overlap, ...)")->required();
    dist->add_option("--a", dist_a, "Comma-separated labels of A");
    dist->add_option("--b", dist_b, "Comma-separated labels of B");
    dist->add_flag("--a-empty", dist_a_empty, "A is the empty set");
    dist->add_flag("--b-empty", dist_b_empty, "B is the empty set");
    dist->add_flag("--approx", dist_approx, "Also print a 6-digit decimal approximation");
    dist_common.attach(dist);

    // compare ---------------------------------------------------------------
    auto* cmp = app.add_subcommand("compare", "Compare I(A,B) with I(C,D)");
    std::string cmp_fn, cmp_a, cmp_b, cmp_c, cmp_d;
    Common cmp_common;
    cmp->add_option("fn", cmp_fn, "Function id or alias")->required();
    cmp->add_option("--a", cmp_a, "A");
    cmp->add_option("--b", cmp_b, "B");
    cmp->add_option("--c", cmp_c, "C");
    cmp->add_option("--d", cmp_d, "D");
    cmp_common.attach(cmp);

    // check -----------------------------------------------------------------
    auto* chk = app.add_subcommand("check", "Check one axiom for one function within bounds");
    std::string chk_axiom, chk_fn;
    BoundsFlags chk_bounds;
    Common chk_common;
    chk->add_option("axiom", chk_axiom, "Axiom name, e.g. TR, RI_STAR, WEAK_TRIANGLE(3/2)")->required();
    chk->add_option("fn", chk_fn, "Function id or alias")->required();
    chk_bounds.attach(chk);
    chk_common.attach(chk);

    // verify ----------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "Run a verification campaign");
    ver->require_subcommand(1);

    auto* v_table = ver->add_subcommand("table", "Reproduce the 4x16 satisfaction table");
    BoundsFlags vt_bounds;
    Common vt_common;
    vt_bounds.attach(v_table);
    vt_common.attach(v_table, false);

    auto* v_disc = ver->add_subcommand("theorem13", "Check the four discriminating axiom combinations");
    v_disc->alias("discrimination");
    BoundsFlags vd_bounds;
    Common vd_common;
    vd_bounds.attach(v_disc);
    vd_common.attach(v_disc, false);

    auto* v_ind = ver->add_subcommand("independence", "Check an axiom set's independence witnesses");
    std::string vi_id;
    BoundsFlags vi_bounds;
    Common vi_common;
    v_ind->add_option("set", vi_id, "Axiom set id (h-dist, j-ordering, ... or thm5, thm7, ...), or 'all'")->required();
    vi_bounds.attach(v_ind);
    vi_common.attach(v_ind);

    auto* v_gamma = ver->add_subcommand("gamma", "Smallest γ for the weak triangle inequality");
    std::string vg_fn;
    BoundsFlags vg_bounds;
    Common vg_common;
    v_gamma->add_option("fn", vg_fn, "Function id or alias")->required();
    vg_bounds.attach(v_gamma, true);
    vg_common.attach(v_gamma);

    auto* v_ord = ver->add_subcommand("ordering-equiv", "Compare the orderings induced by two functions");
    std::string vo_a, vo_b;
    BoundsFlags vo_bounds;
    Common vo_common;
    v_ord->add_option("fn_a", vo_a, "First function")->required();
    v_ord->add_option("fn_b", vo_b, "Second function")->required();
    vo_bounds.attach(v_ord);
    vo_common.attach(v_ord);

    auto* v_gen = ver->add_subcommand("general-additivity", "List passing decompositions I(A,B)=I(κ,λ)+I(μ,ν)");
    std::string vga_fn;
    BoundsFlags vga_bounds;
    Common vga_common;
    v_gen->add_option("fn", vga_fn, "Function id or alias")->required();
    vga_bounds.attach(v_gen);
    vga_common.attach(v_gen);

    auto* v_lem = ver->add_subcommand("lemmas", "Check type indifference, NEU∧TR⇒SYM and type scaling");
    BoundsFlags vl_bounds;
    Common vl_common;
    vl_bounds.attach(v_lem);
    vl_common.attach(v_lem, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*dist) {
            Universe u;
            auto a = intern_set(u, dist_a_empty ? std::vector<std::string>{} : split_labels(dist_a, "--a"));
            auto b = intern_set(u, dist_b_empty ? std::vector<std::string>{} : split_labels(dist_b, "--b"));
            std::optional<WeightAssignment> w;
            if (!dist_common.weights_file.empty())
                w = weights_for(read_weights(dist_common.weights_file), [&](const std::string& l) { return u.find(l); });
            auto fn = catalogue(dist_fn, w);
            Value v = fn(a, b);
            auto labels = [&](const FiniteSet& s) {
                Json arr = Json::array();
                for (auto id : s) arr.push_back(u.label(id));
                return arr;
            };
            switch (parse_format(dist_common.format)) {
            case Format::json: {
                Json j{{"tool_version", kToolVersion}, {"fn", fn.id()}, {"a", labels(a)}, {"b", labels(b)},
                       {"value", v.str()}};
                if (dist_approx) j["approx"] = approx_decimal(v);
                std::cout << j.dump(2) << "\n";
                break;
            }
            case Format::csv:
                std::cout << "fn,value" << (dist_approx ? ",approx" : "") << "\n"
                          << fn.id() << "," << v.str() << (dist_approx ? "," + approx_decimal(v) : "") << "\n";
                break;
            default:
                std::cout << v.str();
                if (dist_approx) std::cout << "  ≈ " << approx_decimal(v);
                std::cout << "\n";
            }
        } else if (*cmp) {
            Universe u;
            auto a = intern_set(u, split_labels(cmp_a, "--a"));
            auto b = intern_set(u, split_labels(cmp_b, "--b"));
            auto c = intern_set(u, split_labels(cmp_c, "--c"));
            auto d = intern_set(u, split_labels(cmp_d, "--d"));
            std::optional<WeightAssignment> w;
            if (!cmp_common.weights_file.empty())
                w = weights_for(read_weights(cmp_common.weights_file), [&](const std::string& l) { return u.find(l); });
            auto fn = catalogue(cmp_fn, w);
            Value x = fn(a, b), y = fn(c, d);
            int s = three_way(x, y);
            const char* rel = s < 0 ? "<" : (s > 0 ? ">" : "=");
            if (parse_format(cmp_common.format) == Format::json)
                std::cout << Json{{"tool_version", kToolVersion}, {"fn", fn.id()}, {"relation", rel},
                                  {"values", Json::array({x.str(), y.str()})}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << rel << "\n";
        } else if (*chk) {
            auto bounds = chk_bounds.bounds();
            auto fn = catalogue(chk_fn, chk_common.enumeration_weights());
            auto ax = AxiomId::parse(chk_axiom);
            auto f = parse_format(chk_common.format);
            if (ax.kind == Axiom::GEN_ADD) {
                auto g = check_general_additivity(fn, bounds);
                std::cout << render_general_additivity(g, f);
                status = g.passing.empty() ? kMismatch : kOk;
            } else {
                auto r = check(ax, fn, bounds);
                std::cout << render_checks({r}, bounds, f);
                status = r.holds ? kOk : kMismatch;
            }
        } else if (*v_table) {
            auto t = build_satisfaction_table(vt_bounds.bounds());
            std::cout << render_table(t, parse_format(vt_common.format));
            status = t.matches() ? kOk : kMismatch;
        } else if (*v_disc) {
            auto d = verify_discrimination(vd_bounds.bounds());
            std::cout << render_discrimination(d, parse_format(vd_common.format));
            status = d.holds() ? kOk : kMismatch;
        } else if (*v_ind) {
            Campaign campaign(vi_bounds.bounds(), vi_common.enumeration_weights());
            std::vector<std::string> ids;
            if (vi_id == "all")
                for (const auto& t : independence_theorems()) ids.push_back(t.id);
            else
                ids.push_back(independence_theorem(vi_id).id);
            for (const auto& id : ids) {
                auto r = build_independence_report(id, campaign);
                std::cout << render_independence(r, parse_format(vi_common.format));
                if (!r.valid()) status = kMismatch;
            }
        } else if (*v_gamma) {
            auto g = gamma_scan(catalogue(vg_fn, vg_common.enumeration_weights()), vg_bounds.bounds());
            std::cout << render_gamma(g, parse_format(vg_common.format));
        } else if (*v_ord) {
            auto w = vo_common.enumeration_weights();
            auto e = verify_ordering_equivalence(catalogue(vo_a, w), catalogue(vo_b, w), vo_bounds.bounds());
            std::cout << render_ordering(e, parse_format(vo_common.format));
            status = e.equivalent ? kOk : kMismatch;
        } else if (*v_gen) {
            auto b = vga_bounds.bounds();
            auto g = check_general_additivity(catalogue(vga_fn, vga_common.enumeration_weights()), b);
            std::cout << render_general_additivity(g, parse_format(vga_common.format));
        } else if (*v_lem) {
            Campaign campaign(vl_bounds.bounds());
            std::vector<LemmaReport> reps = {check_type_indifference(campaign),
                                             check_neutrality_transfer_symmetry(campaign), check_type_scaling(campaign)};
            std::cout << render_lemmas(reps, campaign.bounds(), parse_format(vl_common.format));
            for (const auto& r : reps)
                if (!r.holds()) status = kMismatch;
        }
    } catch (const HeadroomError& e) {
        std::cerr << "error: " << e.what() << "; rerun with --universe " << e.required_universe() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return status;
}
