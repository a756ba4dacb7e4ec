#include "cmreg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/grothendieck.hpp"
#include "cmreg/ladder.hpp"
#include "cmreg/regularity.hpp"
#include "cmreg/tableaux.hpp"
#include "cmreg/verify.hpp"

namespace cmreg {

namespace {

using nlohmann::json;

struct Options {
    std::string perm;
    std::string perm2;
    std::string partition;
    int descent = 0;
    std::string ladder_path;
    std::string format = "text";
    bool verify = false;
    bool doubled = false;
    bool factored = false;
    std::string kind;
    std::string verify_class;
    int n = 0;
    long budget = kDefaultFillingBudget;
    int jobs = 1;
    unsigned seed = 2023;
};

Permutation parse_perm_flag(const std::string& value, const char* subcommand) {
    if (value.empty())
        throw parse_error(std::string(subcommand) + " needs a --perm argument");
    return Permutation::parse(value);
}

Ladder load_ladder(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open ladder file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return Ladder::from_json_text(buffer.str());
}

json cells_json(const Diagram& d) {
    json out = json::array();
    for (const Cell& c : d.cells()) out.push_back({c.row, c.col});
    return out;
}

json report_json(const json& input, const RegularityReport& report) {
    json witness = json::object();
    if (!report.path_sizes.empty()) witness["path_sizes"] = report.path_sizes;
    if (report.max_pipe) witness["max_pipe"] = cells_json(*report.max_pipe);
    return json{{"input", input}, {"reg", report.value}, {"method", report.method_name()},
                {"witness", witness}};
}

void emit_report(const Options& opt, const json& input, const RegularityReport& report,
                 std::ostream& out) {
    if (opt.format == "json") out << report_json(input, report).dump(2) << "\n";
    else out << "reg = " << report.value << " (method: " << report.method_name() << ")\n";
}

int cmd_reg(const Options& opt, std::ostream& out) {
    if (!opt.ladder_path.empty()) {
        const Ladder ladder = load_ladder(opt.ladder_path);
        const RegularityReport report = reg_ladder(ladder, opt.verify);
        emit_report(opt, json::parse(ladder.to_json_text()), report, out);
        return 0;
    }
    if (!opt.partition.empty()) {
        const Partition shape = Partition::parse(opt.partition);
        if (opt.descent < 1) throw parse_error("--partition needs --descent");
        const Permutation g = grassmannian_permutation(shape, opt.descent);
        const RegularityReport report = reg_schubert(g);
        if (opt.verify && deg_grassmannian(shape, opt.descent) - shape.sum() != report.value)
            throw internal_error("staircase formula disagrees with the path statistic");
        emit_report(opt, json{{"partition", shape.str()}, {"descent", opt.descent}, {"perm", g.str()}},
                    report, out);
        return 0;
    }
    if (!opt.perm2.empty()) {
        const Permutation v = parse_perm_flag(opt.perm, "reg --perm2");
        const Permutation w = Permutation::parse(opt.perm2);
        const DescentData dv = descent_data(v);
        const DescentData dw = descent_data(w);
        const bool patch = dv.is_grassmannian && dw.is_grassmannian &&
                           *dv.descents.begin() == *dw.descents.begin() &&
                           shape_of(v).contains(shape_of(w));
        const RegularityReport report = patch ? reg_grassmannian_patch(v, w) : reg_kl_321(v, w);
        if (opt.verify && patch && reg_kl_321(v, w).value != report.value)
            throw internal_error("patch formula disagrees with the pipe formula");
        emit_report(opt, json{{"v", v.str()}, {"w", w.str()}}, report, out);
        return 0;
    }
    const Permutation w = parse_perm_flag(opt.perm, "reg");
    const RegularityReport report = reg_schubert(w);
    if (opt.verify) {
        const auto deg = single_grothendieck(w).degree();
        if ((deg ? *deg : 0) - w.coxeter_length() != report.value)
            throw internal_error("formula disagrees with polynomial degree");
    }
    emit_report(opt, json(w.str()), report, out);
    return 0;
}

void emit_poly(const Options& opt, const SparsePoly& p, std::ostream& out) {
    const std::string text = opt.factored ? str_in_one_minus_t(p) : p.str();
    if (opt.format == "json") {
        json doc{{"poly", text}};
        if (p.degree()) doc["deg"] = *p.degree();
        else doc["deg"] = nullptr;
        out << doc.dump(2) << "\n";
    } else {
        out << text << "\n";
        if (p.degree()) out << "deg = " << *p.degree() << "\n";
        else out << "deg = none (zero polynomial)\n";
    }
}

int cmd_groth(const Options& opt, std::ostream& out) {
    if (!opt.perm2.empty()) {
        const Permutation v = parse_perm_flag(opt.perm, "groth --perm2");
        const Permutation w = Permutation::parse(opt.perm2);
        emit_poly(opt, unspecialized_grothendieck(v, w), out);
        return 0;
    }
    if (!opt.partition.empty()) {
        if (opt.descent < 1) throw parse_error("--partition needs --descent");
        const Permutation g = grassmannian_permutation(Partition::parse(opt.partition), opt.descent);
        emit_poly(opt, single_grothendieck(g), out);
        return 0;
    }
    const Permutation w = parse_perm_flag(opt.perm, "groth");
    emit_poly(opt, opt.doubled ? double_grothendieck(w) : single_grothendieck(w), out);
    return 0;
}

int cmd_kpoly(const Options& opt, std::ostream& out) {
    if (!opt.perm2.empty()) {
        const Permutation v = parse_perm_flag(opt.perm, "kpoly --perm2");
        const Permutation w = Permutation::parse(opt.perm2);
        emit_poly(opt, kpolynomial_kl(v, w), out);
        return 0;
    }
    const Permutation w = parse_perm_flag(opt.perm, "kpoly");
    emit_poly(opt, kpolynomial_schubert(w), out);
    return 0;
}

int cmd_diagram(const Options& opt, std::ostream& out) {
    const Permutation w = parse_perm_flag(opt.perm, "diagram");
    const Diagram d = rothe_diagram(w);
    if (opt.format == "json") {
        out << json{{"perm", w.str()},
                    {"code", lehmer_code(w)},
                    {"length", w.coxeter_length()},
                    {"cells", cells_json(d)},
                    {"essential", cells_json(essential_set(w))},
                    {"dominant", cells_json(dominant_component(w))}}
                   .dump(2)
            << "\n";
        return 0;
    }
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = 1; j <= w.size(); ++j) {
            if (j > 1) out << ' ';
            if (d.contains({i, j})) out << '#';
            else if (w(i) == j) out << 'o';
            else out << '.';
        }
        out << "\n";
    }
    auto print_cells = [&](const char* label, const Diagram& cells) {
        out << label << " = {";
        bool first = true;
        for (const Cell& c : cells.cells()) {
            if (!first) out << ", ";
            out << "(" << c.row << "," << c.col << ")";
            first = false;
        }
        out << "}\n";
    };
    out << "code = (";
    const auto code = lehmer_code(w);
    for (std::size_t i = 0; i < code.size(); ++i) out << (i ? "," : "") << code[i];
    out << ")\n";
    out << "length = " << w.coxeter_length() << "\n";
    print_cells("essential", essential_set(w));
    print_cells("dominant", dominant_component(w));
    return 0;
}

int cmd_tableau(const Options& opt, std::ostream& out) {
    const Permutation w = parse_perm_flag(opt.perm, "tableau");
    std::string kind = opt.kind;
    if (kind.empty()) kind = avoids_1432(w) ? "rothe" : "young";
    SetValuedFilling filling;
    if (kind == "rothe") filling = construct_T_w(w);
    else if (kind == "young") filling = construct_U_v(w);
    else throw parse_error("tableau kind must be rothe or young");
    if (opt.format == "json") {
        json cells = json::array();
        for (std::size_t i = 0; i < filling.entries.size(); ++i) {
            const Cell c = filling.support.cells()[i];
            cells.push_back({{"cell", {c.row, c.col}}, {"entries", filling.entries[i]}});
        }
        out << json{{"perm", w.str()}, {"kind", kind}, {"size", filling.total_entries()},
                    {"cells", cells}}
                   .dump(2)
            << "\n";
    } else {
        out << filling.str();
        out << "#T = " << filling.total_entries() << "\n";
    }
    return 0;
}

int cmd_ladder(const Options& opt, std::ostream& out) {
    const Ladder ladder = load_ladder(opt.ladder_path);
    const auto [u, g] = ladder_to_grassmannian_pair(ladder);
    const Permutation v = ladder_to_vexillary(ladder);
    const RegularityReport report = reg_ladder(ladder, opt.verify);
    if (opt.format == "json") {
        json specs = json::array();
        for (const GeneratorSpec& s : present_ladder(ladder).specs)
            specs.push_back({{"minor_size", s.minor_size}, {"rows", s.row_bound}, {"cols", s.col_bound}});
        out << json{{"ladder", json::parse(ladder.to_json_text())},
                    {"u", u.str()},
                    {"g", g.str()},
                    {"vexillary", v.str()},
                    {"reg", report.value},
                    {"generators", specs}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "rows = (";
    for (std::size_t i = 0; i < ladder.row_lengths().size(); ++i)
        out << (i ? "," : "") << ladder.row_lengths()[i];
    out << ")\n";
    out << "valid ladder with " << ladder.points().size() << " marked points\n";
    out << "u = " << u.str() << "\n";
    out << "g = " << g.str() << "\n";
    out << "vexillary = " << v.str() << "\n";
    for (const GeneratorSpec& s : present_ladder(ladder).specs)
        out << "minors " << s.minor_size << " on top-left " << s.row_bound << " x " << s.col_bound
            << "\n";
    out << "reg = " << report.value << " (method: " << report.method_name() << ")\n";
    return 0;
}

int cmd_export(const Options& opt, std::ostream& out) {
    if (!opt.ladder_path.empty()) {
        out << export_macaulay2(present_ladder(load_ladder(opt.ladder_path)));
        return 0;
    }
    if (!opt.perm2.empty()) {
        out << export_macaulay2(
            present_kl(Permutation::parse(opt.perm), Permutation::parse(opt.perm2)));
        return 0;
    }
    out << export_macaulay2(present_schubert(parse_perm_flag(opt.perm, "export")));
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const std::string cls = opt.verify_class;
    std::vector<SweepResult> results;
    auto require_ceiling = [&](int n, int ceiling) {
        if (n > ceiling)
            throw budget_exceeded("class ceiling is n = " + std::to_string(ceiling) +
                                  "; rerun with a smaller --n");
    };
    const int degree_n = opt.n > 0 ? opt.n : 6;
    const int small_n = opt.n > 0 ? opt.n : 5;
    if (cls == "1432" || cls == "all") {
        require_ceiling(degree_n, 6);
        results.push_back(sweep_fd_degree(degree_n, opt.jobs));
    }
    if (cls == "vexillary" || cls == "all") {
        require_ceiling(degree_n, 6);
        results.push_back(sweep_fa_degree(degree_n, opt.jobs));
    }
    if (cls == "transition" || cls == "all") {
        require_ceiling(degree_n, 6);
        results.push_back(sweep_transition_degree(degree_n, opt.jobs));
    }
    if (cls == "grassmannian-pairs" || cls == "all") {
        require_ceiling(opt.n > 0 ? opt.n : 5, 6);
        results.push_back(sweep_grassmannian_pairs(opt.n > 0 ? opt.n : 5, opt.jobs));
    }
    if (cls == "kl321" || cls == "all") {
        require_ceiling(small_n, 5);
        results.push_back(sweep_kl321(small_n, opt.jobs));
    }
    if (cls == "tableaux" || cls == "all") {
        require_ceiling(small_n, 5);
        results.push_back(sweep_tableaux(small_n, opt.budget));
    }
    if (cls == "expansions") {
        const int n = opt.n > 0 ? opt.n : 4;
        require_ceiling(n, 4);
        results.push_back(sweep_expansions(n, opt.budget));
    } else if (cls == "all") {
        results.push_back(sweep_expansions(4, opt.budget));
    }
    if (cls == "excited" || cls == "all") {
        require_ceiling(small_n, 5);
        results.push_back(sweep_excited(small_n));
    }
    if (cls == "operators" || cls == "all") results.push_back(sweep_operators(opt.seed));
    if (cls == "ladders" || cls == "all") results.push_back(sweep_ladders(50, 8, opt.seed));
    if (results.empty()) throw parse_error("unknown verification class: " + cls);

    const bool counts_permutations = cls == "1432" || cls == "vexillary" || cls == "transition";
    bool all_ok = true;
    for (const SweepResult& r : results) {
        out << "[" << r.name << "] checked " << r.checked
            << (r.checked == 1 ? " case" : " cases") << ", " << r.mismatches << " mismatches\n";
        if (counts_permutations)
            out << "checked " << r.checked << " permutations, " << r.mismatches << " mismatches\n";
        if (!r.ok()) {
            out << "FAIL first counterexample: " << r.first_counterexample << "\n";
            all_ok = false;
        } else {
            out << "PASS\n";
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Castelnuovo-Mumford regularity of Schubert determinantal, "
                 "Kazhdan-Lusztig, and one-sided ladder determinantal ideals"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool wants_perm) {
        if (wants_perm) {
            sub->add_option("--perm", opt.perm, "permutation in one-line notation");
            sub->add_option("--perm2", opt.perm2, "second permutation for (v,w) pairs");
        }
        sub->add_option("--format", opt.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* reg = app.add_subcommand("reg", "regularity of a determinantal quotient");
    add_common(reg, true);
    reg->add_option("--ladder", opt.ladder_path, "ladder JSON file");
    reg->add_option("--partition", opt.partition, "Grassmannian shape, e.g. \"(3,2,2)\"");
    reg->add_option("--descent", opt.descent, "descent position for --partition");
    reg->add_flag("--verify", opt.verify, "cross-check against the independent route");

    CLI::App* groth = app.add_subcommand("groth", "Grothendieck polynomials");
    add_common(groth, true);
    groth->add_option("--partition", opt.partition, "Grassmannian shape, e.g. \"(3,2,2)\"");
    groth->add_option("--descent", opt.descent, "descent position for --partition");
    groth->add_flag("--double", opt.doubled, "double polynomial in x and y");
    groth->add_flag("--factored", opt.factored, "display in powers of (1-t)");

    CLI::App* kpoly = app.add_subcommand("kpoly", "K-polynomials");
    add_common(kpoly, true);
    kpoly->add_flag("--factored", opt.factored, "display in powers of (1-t)");

    CLI::App* diagram = app.add_subcommand("diagram", "Rothe diagram, code, essential set");
    add_common(diagram, true);

    CLI::App* tableau = app.add_subcommand("tableau", "maximal set-valued filling");
    add_common(tableau, true);
    tableau->add_option("--kind", opt.kind, "rothe|young (default by permutation class)");

    CLI::App* ladder = app.add_subcommand("ladder", "validate and analyze a ladder");
    add_common(ladder, false);
    ladder->add_option("--ladder", opt.ladder_path, "ladder JSON file")->required();
    ladder->add_flag("--verify", opt.verify, "cross-check the regularity routes");

    CLI::App* exp = app.add_subcommand("export", "Macaulay2 script for cross-validation");
    add_common(exp, true);
    exp->add_option("--ladder", opt.ladder_path, "ladder JSON file");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive identity sweeps");
    verify->add_option("--class", opt.verify_class, "1432|vexillary|transition|grassmannian-pairs|"
                                                    "kl321|tableaux|expansions|excited|operators|"
                                                    "ladders|all")
        ->required();
    verify->add_option("--n", opt.n, "symmetric group size (class-dependent ceiling)");
    verify->add_option("--budget", opt.budget, "enumeration budget");
    verify->add_option("--jobs", opt.jobs, "worker threads (output independent of the count)");
    verify->add_option("--seed", opt.seed, "seed for the randomized suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (reg->parsed()) return cmd_reg(opt, out);
        if (groth->parsed()) return cmd_groth(opt, out);
        if (kpoly->parsed()) return cmd_kpoly(opt, out);
        if (diagram->parsed()) return cmd_diagram(opt, out);
        if (tableau->parsed()) return cmd_tableau(opt, out);
        if (ladder->parsed()) return cmd_ladder(opt, out);
        if (exp->parsed()) return cmd_export(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cmreg
