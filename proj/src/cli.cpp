#include "symmset/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symmset/dot.hpp"
#include "symmset/json_io.hpp"

namespace symmset {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    require(file.good(), "cannot open input file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    require(file.good(), "cannot open output file: " + path);
    file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("bad vertex list: " + csv);
        }
    }
    return out;
}

struct Options {
    std::string input = "-";
    std::string output = "-";
    std::string json_path;
    std::string mark;
    int n = 0;
    int level = 0;
    int max_k = 0;
    int max_n = 7;
    int samples = 40;
    int graph_max = 7;
    int eq_max = 8;
    std::uint64_t guard = std::uint64_t{1} << 22;
    std::uint64_t seed = 93824;
    bool up_to_iso = false;
    bool oracle = false;
    bool verbose = false;
    bool cycle_mode = false;
};

int dispatch(const std::string& command, const Options& opt, std::istream& in, std::ostream& out,
             std::ostream& err) {
    if (command == "ez-decompose") {
        Structure x = structure_from_json(parse_json(read_input(opt.input, in)));
        SymSetPtr M = make_symset(x.owner);
        write_output(opt.output, out, dump(ez_decomposition_to_json(ez_decompose(*M, x))));
        return 0;
    }

    if (command == "check-propagative") {
        UGraph g = ugraph_from_json(parse_json(read_input(opt.input, in)));
        ordered_json traces = ordered_json::array();
        for (int a = 0; a < g.n(); ++a)
            for (int b = a + 1; b < g.n(); ++b) {
                auto snapshots = phi_trace(g, {a, b});
                traces.push_back(ordered_json{{"seed", {a, b}}, {"sets", snapshots}});
            }
        ordered_json result{{"n", g.n()}, {"propagative", is_propagative(g)}, {"trace", std::move(traces)}};
        write_output(opt.output, out, dump(result));
        return 0;
    }

    if (command == "puzzle") {
        write_output(opt.output, out, std::to_string(puzzle_threshold(opt.n, opt.up_to_iso, opt.max_n)) + "\n");
        return 0;
    }

    if (command == "lower-bound") {
        LowerBoundCertificate cert = verify_lower_bound(opt.level, opt.guard);
        write_output(opt.output, out, dump(lower_bound_certificate_to_json(cert)));
        return 0;
    }

    if (command == "fill-cycle") {
        Cycle cycle = cycle_from_json(parse_json(read_input(opt.input, in)));
        CycleStats stats = cycle_stats(cycle);
        int k = cycle.k();

        if (!meets_filling_inequalities(stats.n, k) && !is_exceptional_case(stats.n, k)) {
            ordered_json report{{"filled", false},
                                {"reason", "the filling theorem's hypotheses fail"},
                                {"stats",
                                 ordered_json{{"n", stats.n},
                                              {"k", k},
                                              {"d", stats.d},
                                              {"upper", stats.upper},
                                              {"lower", stats.lower}}}};
            write_output(opt.output, out, dump(report));
            return 0;
        }

        TraceFn trace;
        if (opt.verbose) trace = [&err](const std::string& msg) { err << "# " << msg << "\n"; };
        Structure filler = construct_degenerate_filler(cycle, trace);
        ordered_json result{{"filled", true},
                            {"filler", structure_to_json(filler)},
                            {"mass", stats.n + 1}};
        if (opt.oracle) {
            std::vector<Structure> fillers = brute_force_fillers(cycle, opt.guard);
            std::uint64_t degenerate = 0;
            bool matches = false;
            for (const Structure& f : fillers) {
                if (is_degenerate(*cycle.symset, f)) {
                    ++degenerate;
                    if (f == filler) matches = true;
                }
            }
            result["oracle"] = ordered_json{{"fillers", fillers.size()},
                                            {"degenerate_fillers", degenerate},
                                            {"matches", matches}};
            ensure(degenerate == 1 && matches,
                   "fill-cycle: oracle cross-check failed (degenerate fillers: " +
                       std::to_string(degenerate) + ")");
        }
        write_output(opt.output, out, dump(result));
        return 0;
    }

    if (command == "verify-aufhebung") {
        AufhebungGuards guards;
        guards.graph_carrier_max = opt.graph_max;
        guards.eq_carrier_max = opt.eq_max;
        guards.brute_force_guard = opt.guard;
        guards.randomized_cycles_per_check = opt.samples;
        guards.seed = opt.seed;
        AufhebungReport report = verify_aufhebung(opt.level, opt.max_k, guards);

        if (opt.json_path == "-") {
            write_output(opt.output, out, dump(aufhebung_report_to_json(report)));
        } else {
            std::ostringstream table;
            table << "Aufhebung of the level labelled by " << report.level << ": claimed value "
                  << report.claimed_value << "\n";
            const auto& lb = report.lower_bound;
            table << "  lower bound  unfillable " << lb.k << "-cycle in " << lb.cycle.symset->name()
                  << ", search " << lb.search_size << ", fillers " << lb.filler_count
                  << ", reduction graph propagative: " << (lb.reduction_graph_propagative ? "yes" : "no")
                  << "  [" << (lb.passed() ? "PASS" : "FAIL") << "]\n";
            for (const auto& c : report.upper_bound_checks) {
                table << "  upper bound  " << c.instance << " k=" << c.k << " " << c.mode << " "
                      << c.cycles_tested << " cycles";
                if (c.mode == "skipped")
                    table << "  [SKIP: " << c.note << "]\n";
                else
                    table << "  [" << (c.all_uniquely_filled ? "PASS" : "FAIL: " + c.note) << "]\n";
            }
            table << "overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
            write_output(opt.output, out, table.str());
            if (!opt.json_path.empty())
                write_output(opt.json_path, out, dump(aufhebung_report_to_json(report)));
        }
        ensure(report.passed(), "verify-aufhebung: a theory-guaranteed check failed");
        return 0;
    }

    if (command == "export-dot") {
        std::string text = read_input(opt.input, in);
        if (opt.cycle_mode) {
            Cycle cycle = cycle_from_json(parse_json(text));
            write_output(opt.output, out, to_dot(reduction_graph(cycle)));
        } else {
            UGraph g = ugraph_from_json(parse_json(text));
            write_output(opt.output, out, to_dot(g, parse_vertex_list(opt.mark)));
        }
        return 0;
    }

    err << "symmset: usage: unknown subcommand " << command << "\n";
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Desk-scale computations with finite symmetric simplicial sets"};
    app.require_subcommand(1);
    Options opt;

    auto* ez = app.add_subcommand("ez-decompose", "EZ-decompose a structure (JSON in, JSON out)");
    ez->add_option("-i,--input", opt.input, "input file, - for stdin");
    ez->add_option("-o,--output", opt.output, "output file, - for stdout");

    auto* prop = app.add_subcommand("check-propagative", "Check propagativity with a Phi trace");
    prop->add_option("-i,--input", opt.input);
    prop->add_option("-o,--output", opt.output);

    auto* puzzle = app.add_subcommand("puzzle", "Minimum degree forcing propagativity, by exhaustive search");
    puzzle->add_option("--n", opt.n, "number of vertices")->required();
    puzzle->add_flag("--up-to-iso", opt.up_to_iso, "restrict to sorted-degree representatives");
    puzzle->add_option("--max-n", opt.max_n, "configured search bound");

    auto* lower = app.add_subcommand("lower-bound", "Emit the unfillable cycle and its certificate");
    lower->add_option("--level", opt.level, "level l >= 1")->required();
    lower->add_option("-o,--output", opt.output);
    lower->add_option("--guard", opt.guard, "filler search size guard");

    auto* fill = app.add_subcommand("fill-cycle", "Construct the degenerate filler of a cycle");
    fill->add_option("-i,--input", opt.input);
    fill->add_option("-o,--output", opt.output);
    fill->add_flag("--oracle", opt.oracle, "cross-check against brute-force search");
    fill->add_flag("--verbose", opt.verbose, "log each proof-step assertion to stderr");
    fill->add_option("--guard", opt.guard, "brute force size guard");

    auto* aufhebung = app.add_subcommand("verify-aufhebung", "Desk-scale main-theorem report");
    aufhebung->add_option("--level", opt.level, "level l >= 1")->required();
    aufhebung->add_option("--max-k", opt.max_k, "largest cycle dimension tested (default claimed+2)");
    aufhebung->add_option("--json", opt.json_path, "write the JSON report here (- for stdout)");
    aufhebung->add_option("-o,--output", opt.output);
    aufhebung->add_option("--samples", opt.samples, "randomized cycles per check");
    aufhebung->add_option("--seed", opt.seed, "randomized generation seed");
    aufhebung->add_option("--graph-max", opt.graph_max, "carrier bound for graph instances");
    aufhebung->add_option("--eq-max", opt.eq_max, "carrier bound for the Eq family");
    aufhebung->add_option("--guard", opt.guard, "brute force size guard");

    auto* dot = app.add_subcommand("export-dot", "Export a graph or a cycle's reduction graph to DOT");
    dot->add_option("-i,--input", opt.input);
    dot->add_option("-o,--output", opt.output);
    dot->add_flag("--cycle", opt.cycle_mode, "input is a cycle; export its reduction graph");
    dot->add_option("--mark", opt.mark, "comma-separated vertices to draw filled");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "symmset: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, in, out, err);
    } catch (const DomainError& e) {
        err << "symmset: domain: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "symmset: internal: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "symmset: internal: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace symmset
