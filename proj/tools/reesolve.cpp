#include "reesolve/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace rees;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitUnsupported = 4;

struct CommonOpts {
    int max_steps = 200;
    int max_degree = 40;
    int grid_radius = 2;
    unsigned seed = 1;
    std::string candidates_file;
    bool dump = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--max-steps", o.max_steps, "step budget for the resolution driver");
    cmd->add_option("--max-degree", o.max_degree, "degree cap for Groebner computations");
    cmd->add_option("--grid-radius", o.grid_radius, "integer radius of the sampling grid");
    cmd->add_option("--seed", o.seed, "seed for the randomized verification battery");
    cmd->add_option("--candidates", o.candidates_file, "file with extra candidate points");
    cmd->add_flag("--dump", o.dump, "reprint the parsed problem file and exit");
}

ProblemFile load_or_exit(const std::string& path) { return load_problem(path); }

std::vector<PointQ> extra_points(const CommonOpts& o, const ProblemFile& pf) {
    std::vector<PointQ> pts = pf.points;
    if (!o.candidates_file.empty()) {
        std::ifstream in(o.candidates_file);
        if (!in) throw std::runtime_error("cannot open '" + o.candidates_file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            pts.push_back(parse_point(line, static_cast<int>(pf.vars.size())));
        }
    }
    return pts;
}

ResolveLimits limits_of(const CommonOpts& o) {
    ResolveLimits lim;
    lim.max_steps = o.max_steps;
    lim.max_degree = o.max_degree;
    return lim;
}

int outcome_exit(Outcome oc) {
    switch (oc) {
        case Outcome::Resolved: return kExitOk;
        case Outcome::LimitExceeded: return kExitLimit;
        case Outcome::UnsupportedGeometry: return kExitUnsupported;
    }
    return kExitOk;
}

std::vector<PointQ> sample_grid(int dim, int radius, int extra, unsigned seed) {
    std::vector<PointQ> out;
    std::vector<int> cur(dim, -radius);
    while (true) {
        std::vector<Rat> c;
        for (int v : cur) c.push_back(Rat(v));
        out.push_back(PointQ(std::move(c)));
        int i = 0;
        while (i < dim && ++cur[i] > radius) cur[i++] = -radius;
        if (i == dim) break;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (int k = 0; k < extra; ++k) {
        std::vector<Rat> c;
        for (int i = 0; i < dim; ++i) c.push_back(Rat(num(rng), den(rng)));
        out.push_back(PointQ(std::move(c)));
    }
    return out;
}

int cmd_ord(const std::string& path, const CommonOpts& o, const std::string& point_text) {
    ProblemFile pf = load_or_exit(path);
    if (o.dump) {
        std::cout << dump_problem(pf);
        return kExitOk;
    }
    ReesAlgebra G = pf.algebra();
    PointQ p = point_text.empty() ? PointQ::origin(G.dim())
                                  : parse_point(point_text, G.dim());
    auto v = ord_at(G, p);
    std::cout << (v ? rat_to_string(*v) : "infinity") << "\n";
    return kExitOk;
}

int cmd_sing(const std::string& path, const CommonOpts& o) {
    ProblemFile pf = load_or_exit(path);
    if (o.dump) {
        std::cout << dump_problem(pf);
        return kExitOk;
    }
    ReesAlgebra G = pf.algebra();
    Ideal si = sing_ideal(G);
    nlohmann::ordered_json j;
    j["generators"] = nlohmann::ordered_json::array();
    for (const Poly& g : si.gens()) j["generators"].push_back(g.str(pf.vars));
    int in_sing = 0, total = 0;
    for (const PointQ& p : sample_grid(G.dim(), o.grid_radius, 50, o.seed)) {
        ++total;
        if (contains_point(G, p)) ++in_sing;
    }
    j["grid"] = {{"points", total}, {"singular", in_sing}};
    Membership unit = contains_unit(si);
    j["empty"] = unit == Membership::In ? "yes" : (unit == Membership::NotIn ? "no" : "undecided");
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_diffclose(const std::string& path, const CommonOpts& o) {
    ProblemFile pf = load_or_exit(path);
    if (o.dump) {
        std::cout << dump_problem(pf);
        return kExitOk;
    }
    ReesAlgebra D = diff_closure(pf.algebra());
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const WeightedGen& g : D.gens())
        j.push_back({{"f", g.f.str(pf.vars)}, {"n", g.n}});
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_transform(const std::string& path, const CommonOpts& o, const std::string& center_text) {
    ProblemFile pf = load_or_exit(path);
    if (o.dump) {
        std::cout << dump_problem(pf);
        return kExitOk;
    }
    MarkedObject M = pf.marked();
    CenterSpec center;
    {
        std::stringstream ss(center_text);
        std::string name;
        while (std::getline(ss, name, ',')) {
            bool found = false;
            for (size_t i = 0; i < pf.vars.size(); ++i) {
                if (pf.vars[i] == name) {
                    center.push_back(static_cast<int>(i));
                    found = true;
                }
            }
            if (!found) {
                std::cerr << "unknown center variable '" << name << "'\n";
                return kExitParse;
            }
        }
        std::sort(center.begin(), center.end());
        center.erase(std::unique(center.begin(), center.end()), center.end());
    }
    if (center.empty()) {
        std::cerr << "empty center\n";
        return kExitParse;
    }
    TransformResult tr;
    try {
        tr = transform_marked(M, center, 1, pf.points);
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUnsupported;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (size_t k = 0; k < tr.children.size(); ++k) {
        const MarkedObject& child = tr.children[k];
        nlohmann::ordered_json jc;
        jc["chart"] = child.chart.id;
        jc["gens"] = nlohmann::ordered_json::array();
        for (const WeightedGen& g : child.G.gens())
            jc["gens"].push_back({{"f", g.f.str(child.chart.vars)}, {"n", g.n}});
        jc["divisors"] = nlohmann::ordered_json::array();
        for (const DivisorRecord& d : child.chart.divisors)
            jc["divisors"].push_back({{"var", child.chart.vars[d.var]},
                                      {"label", d.label},
                                      {"a", rat_to_string(d.a)},
                                      {"inD", d.inD}});
        j.push_back(jc);
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_resolve(const std::string& path, const CommonOpts& o) {
    ProblemFile pf = load_or_exit(path);
    if (o.dump) {
        std::cout << dump_problem(pf);
        return kExitOk;
    }
    ResolutionTrace tr = resolve(pf.marked(), limits_of(o), extra_points(o, pf));
    std::cout << trace_to_json(tr) << "\n";
    return outcome_exit(tr.outcome);
}

int cmd_check_equiv(const std::string& path1, const std::string& path2, const CommonOpts& o) {
    ProblemFile a = load_or_exit(path1), b = load_or_exit(path2);
    if (o.dump) {
        std::cout << dump_problem(a) << dump_problem(b);
        return kExitOk;
    }
    ResolutionTrace ta = resolve(a.marked(), limits_of(o), extra_points(o, a));
    ResolutionTrace tb = resolve(b.marked(), limits_of(o), extra_points(o, b));
    bool equal = traces_equal(ta, tb);

    // Invariant-proxy battery: Sing / ord / word agreement on the grid.
    ReesAlgebra Ga = a.algebra(), Gb = b.algebra();
    MarkedObject Ma = a.marked(), Mb = b.marked();
    int mismatches = 0;
    if (Ga.dim() == Gb.dim()) {
        for (const PointQ& p : sample_grid(Ga.dim(), o.grid_radius, 50, o.seed)) {
            bool sa = contains_point(Ga, p), sb = contains_point(Gb, p);
            if (sa != sb) {
                ++mismatches;
                continue;
            }
            if (sa) {
                if (*ord_at(Ga, p) != *ord_at(Gb, p)) ++mismatches;
                if (word_at(Ma, p) != word_at(Mb, p)) ++mismatches;
            }
        }
    } else {
        ++mismatches;
    }

    if (ta.outcome != Outcome::Resolved && traces_equal(ta, tb) && mismatches == 0) {
        std::cout << "EQUIVALENT so far, but runs ended with " << outcome_name(ta.outcome)
                  << " (traces identical, " << ta.blowup_count() << " steps)\n";
        return outcome_exit(ta.outcome);
    }
    if (equal && mismatches == 0) {
        std::cout << "EQUIVALENT: traces identical (" << ta.blowup_count() << " step"
                  << (ta.blowup_count() == 1 ? "" : "s") << ")\n";
        return kExitOk;
    }
    std::cout << "NOT EQUIVALENT: " << (equal ? "" : "traces differ; ") << mismatches
              << " invariant mismatches\n";
    return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rees algebra calculus and constructive resolution over exact rationals"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string file1, file2, point_text, center_text;

    CLI::App* ord = app.add_subcommand("ord", "order of the algebra at a rational point");
    ord->add_option("file", file1)->required();
    ord->add_option("--point", point_text, "comma-separated rational coordinates");
    add_common(ord, o);

    CLI::App* sing = app.add_subcommand("sing", "defining ideal and grid summary of Sing");
    sing->add_option("file", file1)->required();
    add_common(sing, o);

    CLI::App* dc = app.add_subcommand("diffclose", "generators of the differential closure");
    dc->add_option("file", file1)->required();
    add_common(dc, o);

    CLI::App* tf = app.add_subcommand("transform", "blow up a coordinate center, print charts");
    tf->add_option("file", file1)->required();
    tf->add_option("--center", center_text, "comma-separated center variables")->required();
    add_common(tf, o);

    CLI::App* rs = app.add_subcommand("resolve", "run the resolution driver, emit the trace");
    rs->add_option("file", file1)->required();
    add_common(rs, o);

    CLI::App* ce = app.add_subcommand("check-equiv", "resolve two inputs and compare traces");
    ce->add_option("file1", file1)->required();
    ce->add_option("file2", file2)->required();
    add_common(ce, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(ord)) return cmd_ord(file1, o, point_text);
        if (app.got_subcommand(sing)) return cmd_sing(file1, o);
        if (app.got_subcommand(dc)) return cmd_diffclose(file1, o);
        if (app.got_subcommand(tf)) return cmd_transform(file1, o, center_text);
        if (app.got_subcommand(rs)) return cmd_resolve(file1, o);
        if (app.got_subcommand(ce)) return cmd_check_equiv(file1, file2, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
