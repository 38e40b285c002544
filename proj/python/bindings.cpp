#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symmset/cli.hpp"
#include "symmset/dot.hpp"
#include "symmset/json_io.hpp"

namespace py = pybind11;
using namespace symmset;

namespace {

std::string structure_repr(const Structure& x) { return structure_to_json(x).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite symmetric simplicial sets: EZ-decomposition, cycle filling, "
              "propagative graphs and Aufhebung experiments";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<FinSet>(m, "FinSet")
        .def(py::init<int>(), py::arg("size"))
        .def(py::init<int, std::vector<std::string>>(), py::arg("size"), py::arg("labels"))
        .def_readonly("size", &FinSet::size)
        .def_readonly("labels", &FinSet::labels)
        .def("display", &FinSet::display)
        .def(py::self == py::self)
        .def("__repr__", [](const FinSet& a) { return finset_to_json(a).dump(); });

    py::class_<FinFn>(m, "FinFn")
        .def(py::init<FinSet, FinSet, std::vector<int>>(), py::arg("dom"), py::arg("cod"),
             py::arg("images"))
        .def_readonly("dom", &FinFn::dom)
        .def_readonly("cod", &FinFn::cod)
        .def_readonly("images", &FinFn::images)
        .def("__call__", [](const FinFn& f, int i) {
            require(i >= 0 && i < f.dom.size, "FinFn: argument out of range");
            return f(i);
        })
        .def(py::self == py::self)
        .def("__repr__", [](const FinFn& f) { return finfn_to_json(f).dump(); });

    py::class_<EquivRel>(m, "EquivRel")
        .def_property_readonly("carrier", [](const EquivRel& r) { return r.carrier; })
        .def_readonly("class_of", &EquivRel::class_of)
        .def("num_classes", &EquivRel::num_classes)
        .def("classes", &EquivRel::classes)
        .def("related", &EquivRel::related)
        .def(py::self == py::self)
        .def("__repr__", [](const EquivRel& r) { return equiv_to_json(r).dump(); });

    py::class_<Structure>(m, "Structure")
        .def_readonly("owner", &Structure::owner)
        .def_readonly("carrier", &Structure::carrier)
        .def(py::self == py::self)
        .def("to_json", [](const Structure& x) { return structure_to_json(x).dump(2); })
        .def("__repr__", &structure_repr);

    py::class_<SymSet, SymSetPtr>(m, "SymSet")
        .def_property_readonly("name", &SymSet::name)
        .def("structure_count",
             [](const SymSet& s, const FinSet& a) { return s.structure_count(a); })
        .def("structure_at",
             [](const SymSet& s, const FinSet& a, std::uint64_t i) { return s.structure_at(a, i); })
        .def("structures",
             [](const SymSet& s, const FinSet& a, std::uint64_t guard) {
                 return s.enumerate_structures(a, guard);
             },
             py::arg("carrier"), py::arg("guard") = std::uint64_t{1} << 20)
        .def("pullback",
             [](const SymSet& s, const Structure& x, const FinFn& alpha) { return s.pullback(x, alpha); })
        .def("from_edges",
             [](const SymSet& s, const FinSet& a, std::vector<std::pair<int, int>> edges) {
                 return s.from_payload(a, EdgeSet{std::move(edges)});
             })
        .def("from_classes",
             [](const SymSet& s, const FinSet& a, const std::vector<std::vector<int>>& classes) {
                 std::vector<int> labels(static_cast<std::size_t>(a.size), -1);
                 int cls = 0;
                 for (const auto& block : classes) {
                     for (int v : block) {
                         require(v >= 0 && v < a.size, "from_classes: element out of range");
                         require(labels[static_cast<std::size_t>(v)] < 0, "from_classes: blocks overlap");
                         labels[static_cast<std::size_t>(v)] = cls;
                     }
                     ++cls;
                 }
                 for (int v : labels) require(v >= 0, "from_classes: blocks must cover the carrier");
                 return s.from_payload(a, Blocks{std::move(labels)});
             })
        .def("sentinel", [](const SymSet& s, const FinSet& a) { return s.from_payload(a, Sentinel{}); })
        .def("from_colors",
             [](const SymSet& s, const FinSet& a, std::vector<int> colors) {
                 return s.from_payload(a, Coloring{std::move(colors)});
             })
        .def("from_label",
             [](const SymSet& s, const FinSet& a, int v) { return s.from_payload(a, Atom{v}); })
        .def("__repr__", [](const SymSet& s) { return "<SymSet " + s.name() + ">"; });

    m.def("make_symset", &make_symset, py::arg("descriptor"));
    m.def("graph_symset", &graph_symset);
    m.def("eq_symset", &eq_symset);
    m.def("representable_symset", &representable_symset);
    m.def("eq_exact_symset", &eq_exact_symset);
    m.def("eq_leq_symset", &eq_leq_symset);
    m.def("discrete_symset", &discrete_symset);
    m.def("skeleton_symset", &skeleton_symset, py::arg("inner"), py::arg("l"),
          py::arg("scan_guard") = std::uint64_t{1} << 22);

    m.def("identity", &identity);
    m.def("compose", &compose);
    m.def("is_surjective", &is_surjective);
    m.def("is_injective", &is_injective);
    m.def("epi_mono_factorize", &epi_mono_factorize);
    m.def("delta", &delta, py::arg("A"), py::arg("a"));
    m.def("collapse", &collapse, py::arg("A"), py::arg("a"), py::arg("b"));
    m.def("enumerate_functions", &enumerate_functions);
    m.def("enumerate_surjections", &enumerate_surjections);
    m.def("enumerate_partitions", &enumerate_partitions);
    m.def("bell_number", &bell_number);
    m.def("stirling2", &stirling2);

    py::class_<EzDecomposition>(m, "EzDecomposition")
        .def_readonly("congruence", &EzDecomposition::congruence)
        .def_readonly("quotient_map", &EzDecomposition::quotient_map)
        .def_readonly("quotient_structure", &EzDecomposition::quotient_structure)
        .def_readonly("mass", &EzDecomposition::mass)
        .def("__repr__", [](const EzDecomposition& d) { return ez_decomposition_to_json(d).dump(); });

    m.def("ez_congruence",
          [](const SymSetPtr& M, const Structure& x) { return ez_congruence(*M, x); });
    m.def("mass", [](const SymSetPtr& M, const Structure& x) { return mass(*M, x); });
    m.def("ez_decompose",
          [](const SymSetPtr& M, const Structure& x) { return ez_decompose(*M, x); });
    m.def("is_degenerate",
          [](const SymSetPtr& M, const Structure& x) { return is_degenerate(*M, x); });
    m.def("reduces",
          [](const SymSetPtr& M, const Structure& x, int a) { return reduces(*M, x, a); });
    m.def("decomposition_lifting",
          [](const SymSetPtr& M, const Structure& x, int a, const EzDecomposition& face) {
              return decomposition_lifting(*M, x, a, face);
          });
    m.def("equality_lifting_two_points_check",
          [](const SymSetPtr& M, const Structure& x, const Structure& y, int a, int b) {
              return equality_lifting_two_points_check(*M, x, y, a, b);
          });

    py::class_<UGraph>(m, "UGraph")
        .def(py::init<FinSet, std::vector<std::pair<int, int>>>(), py::arg("vertices"),
             py::arg("edges"))
        .def_readonly("vertices", &UGraph::vertices)
        .def_readonly("edges", &UGraph::edges)
        .def("n", &UGraph::n)
        .def("degree", &UGraph::degree)
        .def(py::self == py::self)
        .def("__repr__", [](const UGraph& g) { return ugraph_to_json(g).dump(); });

    m.def("phi", &phi, py::arg("graph"), py::arg("s"));
    m.def("phi_trace", &phi_trace, py::arg("graph"), py::arg("seed"));
    m.def("is_propagative", py::overload_cast<const UGraph&>(&is_propagative));
    m.def("min_degree", &min_degree);
    m.def("bipartite_counterexample", &bipartite_counterexample);

    py::class_<PuzzleSearch>(m, "PuzzleSearch")
        .def_readonly("n", &PuzzleSearch::n)
        .def_readonly("threshold", &PuzzleSearch::threshold)
        .def_readonly("graphs_total", &PuzzleSearch::graphs_total)
        .def_readonly("propagativity_checks", &PuzzleSearch::propagativity_checks)
        .def_readonly("high_min_degree_graphs", &PuzzleSearch::high_min_degree_graphs)
        .def_readonly("high_min_degree_counterexamples",
                      &PuzzleSearch::high_min_degree_counterexamples)
        .def_readonly("max_nonpropagative_min_degree",
                      &PuzzleSearch::max_nonpropagative_min_degree);

    m.def("puzzle_search", &puzzle_search, py::arg("n"), py::arg("up_to_iso") = false,
          py::arg("max_n") = 7);
    m.def("puzzle_threshold", &puzzle_threshold, py::arg("n"), py::arg("up_to_iso") = false,
          py::arg("max_n") = 7);

    py::class_<Cycle>(m, "Cycle")
        .def_readonly("symset", &Cycle::symset)
        .def_readonly("P", &Cycle::P)
        .def_readonly("faces", &Cycle::faces)
        .def("k", &Cycle::k)
        .def("to_json", [](const Cycle& c) { return cycle_to_json(c).dump(2); })
        .def("__repr__", [](const Cycle& c) { return cycle_to_json(c).dump(); });

    py::class_<CycleStats>(m, "CycleStats")
        .def_readonly("n", &CycleStats::n)
        .def_readonly("d", &CycleStats::d)
        .def_readonly("upper", &CycleStats::upper)
        .def_readonly("lower", &CycleStats::lower)
        .def_readonly("face_mass", &CycleStats::face_mass);

    py::class_<ReductionGraph>(m, "ReductionGraph")
        .def_readonly("P", &ReductionGraph::P)
        .def_readonly("edges", &ReductionGraph::edges)
        .def_readonly("upper", &ReductionGraph::upper)
        .def_readonly("lower", &ReductionGraph::lower)
        .def_readonly("upper_subgraph", &ReductionGraph::upper_subgraph)
        .def("has_edge", &ReductionGraph::has_edge)
        .def("upper_edges", &ReductionGraph::upper_edges);

    m.def("validate_cycle", &validate_cycle, py::arg("symset"), py::arg("P"), py::arg("faces"));
    m.def("restrict_to_cycle", &restrict_to_cycle, py::arg("symset"), py::arg("f"));
    m.def("brute_force_fillers", &brute_force_fillers, py::arg("cycle"),
          py::arg("guard") = std::uint64_t{1} << 22);
    m.def("cycle_stats", &cycle_stats);
    m.def("reduction_graph", &reduction_graph);
    m.def("seed_filler", &seed_filler, py::arg("cycle"), py::arg("p"), py::arg("q"),
          py::arg("trace") = TraceFn{});
    m.def("propagate_filler", &propagate_filler, py::arg("cycle"), py::arg("f"), py::arg("s"),
          py::arg("trace") = TraceFn{});
    m.def("construct_degenerate_filler", &construct_degenerate_filler, py::arg("cycle"),
          py::arg("trace") = TraceFn{});
    m.def("meets_filling_inequalities", &meets_filling_inequalities, py::arg("n"), py::arg("k"));
    m.def("is_exceptional_case", &is_exceptional_case, py::arg("n"), py::arg("k"));

    m.def("is_l_skeletal",
          [](const SymSetPtr& M, int l, int bound) { return is_l_skeletal(*M, l, bound); },
          py::arg("M"), py::arg("l"), py::arg("size_bound"));
    m.def("skeleton_membership",
          [](const SymSetPtr& M, int l, const Structure& x) { return skeleton_membership(*M, l, x); });
    m.def("is_l_coskeletal", &is_l_coskeletal, py::arg("M"), py::arg("l"), py::arg("k_bound"),
          py::arg("carrier_guard") = std::uint64_t{4096});
    m.def("lower_bound_cycle", &lower_bound_cycle, py::arg("l"));

    py::class_<LowerBoundCertificate>(m, "LowerBoundCertificate")
        .def_readonly("level", &LowerBoundCertificate::level)
        .def_readonly("k", &LowerBoundCertificate::k)
        .def_readonly("cycle", &LowerBoundCertificate::cycle)
        .def_readonly("search_size", &LowerBoundCertificate::search_size)
        .def_readonly("filler_count", &LowerBoundCertificate::filler_count)
        .def_readonly("reduction_graph_propagative",
                      &LowerBoundCertificate::reduction_graph_propagative)
        .def("passed", &LowerBoundCertificate::passed)
        .def("__repr__",
             [](const LowerBoundCertificate& c) { return lower_bound_certificate_to_json(c).dump(); });

    m.def("verify_lower_bound", &verify_lower_bound, py::arg("l"),
          py::arg("guard") = std::uint64_t{1} << 22);
    m.def("claimed_aufhebung", &claimed_aufhebung, py::arg("l"));

    py::class_<AufhebungGuards>(m, "AufhebungGuards")
        .def(py::init<>())
        .def_readwrite("graph_carrier_max", &AufhebungGuards::graph_carrier_max)
        .def_readwrite("eq_carrier_max", &AufhebungGuards::eq_carrier_max)
        .def_readwrite("exhaustive_family_guard", &AufhebungGuards::exhaustive_family_guard)
        .def_readwrite("brute_force_guard", &AufhebungGuards::brute_force_guard)
        .def_readwrite("randomized_cycles_per_check", &AufhebungGuards::randomized_cycles_per_check)
        .def_readwrite("seed", &AufhebungGuards::seed);

    py::class_<UpperBoundCheck>(m, "UpperBoundCheck")
        .def_readonly("instance", &UpperBoundCheck::instance)
        .def_readonly("k", &UpperBoundCheck::k)
        .def_readonly("mode", &UpperBoundCheck::mode)
        .def_readonly("cycles_tested", &UpperBoundCheck::cycles_tested)
        .def_readonly("all_uniquely_filled", &UpperBoundCheck::all_uniquely_filled)
        .def_readonly("note", &UpperBoundCheck::note);

    py::class_<AufhebungReport>(m, "AufhebungReport")
        .def_readonly("level", &AufhebungReport::level)
        .def_readonly("claimed_value", &AufhebungReport::claimed_value)
        .def_readonly("k_bound", &AufhebungReport::k_bound)
        .def_readonly("lower_bound", &AufhebungReport::lower_bound)
        .def_readonly("upper_bound_checks", &AufhebungReport::upper_bound_checks)
        .def("passed", &AufhebungReport::passed)
        .def("to_json", [](const AufhebungReport& r) { return aufhebung_report_to_json(r).dump(2); })
        .def("__repr__", [](const AufhebungReport& r) { return aufhebung_report_to_json(r).dump(); });

    m.def("verify_aufhebung", &verify_aufhebung, py::arg("l"), py::arg("k_bound") = 0,
          py::arg("guards") = AufhebungGuards{});

    m.def("structure_from_json",
          [](const std::string& text) { return structure_from_json(parse_json(text)); });
    m.def("cycle_from_json", [](const std::string& text) { return cycle_from_json(parse_json(text)); });
    m.def("ugraph_from_json", [](const std::string& text) { return ugraph_from_json(parse_json(text)); });
    m.def("to_dot",
          [](const UGraph& g, const std::vector<int>& mark) { return to_dot(g, mark); },
          py::arg("graph"), py::arg("mark") = std::vector<int>{});
    m.def("reduction_graph_to_dot", [](const ReductionGraph& g) { return to_dot(g); });
}
