#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stepup/certificate.hpp"
#include "stepup/coloring.hpp"
#include "stepup/construction.hpp"
#include "stepup/delta.hpp"
#include "stepup/verification.hpp"

namespace py = pybind11;
using namespace stepup;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Delta-profile 4-graph construction, verification and edge "
            "extraction";

  py::register_exception<Error>(m, "StepupError", PyExc_ValueError);

  py::enum_<ExtremumTag>(m, "ExtremumTag")
      .value("LocalMin", ExtremumTag::LocalMin)
      .value("LocalMax", ExtremumTag::LocalMax)
      .value("Neither", ExtremumTag::Neither);

  py::enum_<Monotonicity>(m, "Monotonicity")
      .value("Increasing", Monotonicity::Increasing)
      .value("Decreasing", Monotonicity::Decreasing)
      .value("No", Monotonicity::No);

  py::enum_<Color>(m, "Color")
      .value("Red", Color::Red)
      .value("Blue", Color::Blue);

  py::enum_<Rule>(m, "Rule")
      .value("I", Rule::I)
      .value("II", Rule::II)
      .value("III", Rule::III);

  py::enum_<ExtractionCase>(m, "ExtractionCase")
      .value("A1LessA2", ExtractionCase::A1LessA2)
      .value("A1GreaterA2", ExtractionCase::A1GreaterA2)
      .value("MonotoneRunCase", ExtractionCase::MonotoneRunCase);

  m.def("delta", &delta, py::arg("a"), py::arg("b"));
  m.def("delta_profile",
        [](const std::vector<Vertex>& t) { return delta_profile(t); });
  m.def("check_property_a", &check_property_A);
  m.def("check_property_b",
        [](const std::vector<Vertex>& t) { return check_property_B(t); });
  m.def("check_property_c",
        [](const std::vector<Vertex>& t) { return check_property_C(t); });
  m.def("classify_extrema", [](const std::vector<DeltaValue>& p) {
    return classify_extrema(p);
  });
  m.def("is_monotone",
        [](const std::vector<DeltaValue>& p) { return is_monotone(p); });

  py::class_<PairColoring>(m, "PairColoring")
      .def(py::init<int>(), py::arg("universe"))
      .def_property_readonly("universe", &PairColoring::universe)
      .def_property_readonly("pair_count", &PairColoring::pair_count)
      .def_static("pair_index", &PairColoring::pair_index)
      .def("color_of", &PairColoring::color_of)
      .def("set_color", &PairColoring::set_color)
      .def("bit", &PairColoring::bit)
      .def("set_bit", &PairColoring::set_bit)
      .def("flipped", &PairColoring::flipped)
      .def("to_hex", &PairColoring::to_hex)
      .def_static("from_hex", &PairColoring::from_hex)
      .def("serialize", &PairColoring::serialize)
      .def_static("parse", &PairColoring::parse)
      .def(py::self == py::self);

  m.def("is_good_triple", &is_good_triple);
  m.def("find_good_triple", [](const PairColoring& phi,
                               const std::vector<DeltaValue>& values) {
    return find_good_triple(phi, values);
  });
  m.def("verify_phi", &verify_phi, py::arg("phi"), py::arg("n"));
  m.def("random_phi_search", &random_phi_search, py::arg("universe"),
        py::arg("n"), py::arg("trials"), py::arg("seed"),
        py::arg("workers") = 1);

  py::class_<SteinerSystem>(m, "SteinerSystem")
      .def_readonly("points", &SteinerSystem::points)
      .def_readonly("triples", &SteinerSystem::triples);
  m.def("greedy_partial_steiner", &greedy_partial_steiner);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("n", &BoundReport::n)
      .def_readonly("c0", &BoundReport::c0)
      .def_readonly("log2_domain", &BoundReport::log2_domain)
      .def_readonly("domain", &BoundReport::domain)
      .def_readonly("domain_exact", &BoundReport::domain_exact)
      .def_readonly("triple_count", &BoundReport::triple_count)
      .def_readonly("log_expectation", &BoundReport::log_expectation)
      .def_readonly("feasible", &BoundReport::feasible);
  m.def("probabilistic_bound", &probabilistic_bound, py::arg("n"),
        py::arg("c0"));

  py::class_<Edge4>(m, "Edge4")
      .def_readonly("quad", &Edge4::quad)
      .def_readonly("rule", &Edge4::rule);

  py::class_<HypergraphView>(m, "HypergraphView")
      .def(py::init<int, PairColoring>(), py::arg("width"), py::arg("phi"))
      .def_property_readonly("width", &HypergraphView::width)
      .def_property_readonly("vertex_count", &HypergraphView::vertex_count)
      .def_property_readonly("phi", &HypergraphView::phi);

  m.def("edge_predicate",
        [](const HypergraphView& h, const std::vector<Vertex>& quad) {
          return edge_predicate(h, quad);
        });
  m.def("materialize", &materialize, py::arg("hypergraph"),
        py::arg("vertex_cap") = kDefaultMaterializeCap);

  py::class_<RuleCounts>(m, "RuleCounts")
      .def_readonly("rule_i", &RuleCounts::rule_i)
      .def_readonly("rule_ii", &RuleCounts::rule_ii)
      .def_readonly("rule_iii", &RuleCounts::rule_iii)
      .def("total", &RuleCounts::total);
  m.def("edge_counts_by_rule", &edge_counts_by_rule, py::arg("hypergraph"),
        py::arg("vertex_cap") = kDefaultMaterializeCap);
  m.def("format_edge_list", [](const std::vector<Edge4>& edges) {
    return format_edge_list(edges);
  });

  m.def("is_independent",
        [](const HypergraphView& h, const std::vector<Vertex>& s) {
          return is_independent(h, s);
        });

  py::class_<K5Violation>(m, "K5Violation")
      .def_readonly("five", &K5Violation::five);
  m.def("find_k5", &find_k5, py::arg("hypergraph"),
        py::arg("vertex_cap") = kDefaultK5Cap, py::arg("workers") = 1);

  py::class_<AlphaResult>(m, "AlphaResult")
      .def_readonly("alpha", &AlphaResult::alpha)
      .def_readonly("witness", &AlphaResult::witness);
  m.def("independence_number", &independence_number, py::arg("hypergraph"),
        py::arg("vertex_cap"));
  m.def("greedy_independent_lower_bound", &greedy_independent_lower_bound,
        py::arg("hypergraph"), py::arg("seed"));

  py::class_<SweepLine>(m, "SweepLine")
      .def_readonly("coloring_hex", &SweepLine::coloring_hex)
      .def_readonly("k5_free", &SweepLine::k5_free)
      .def_readonly("alpha", &SweepLine::alpha);
  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("lines", &SweepReport::lines)
      .def_readonly("min_alpha", &SweepReport::min_alpha)
      .def_readonly("max_alpha", &SweepReport::max_alpha)
      .def_readonly("k5_violations", &SweepReport::k5_violations);
  m.def("sweep_all_colorings", &sweep_all_colorings, py::arg("width"),
        py::arg("workers") = 1, py::arg("with_alpha") = true);
  m.def("format_sweep_line", &format_sweep_line);

  py::class_<LayerStack>(m, "LayerStack")
      .def_readonly("tuple", &LayerStack::tuple)
      .def_readonly("profile", &LayerStack::profile)
      .def_readonly("factor", &LayerStack::factor)
      .def_readonly("depth", &LayerStack::depth)
      .def_readonly("layers", &LayerStack::layers);

  py::class_<MonotoneRun>(m, "MonotoneRun")
      .def(py::init([](std::vector<int> indices) {
        MonotoneRun run;
        run.indices = std::move(indices);
        return run;
      }))
      .def_readonly("indices", &MonotoneRun::indices);

  m.def("layer_size_schedule", &layer_size_schedule, py::arg("beta0"),
        py::arg("factor"), py::arg("depth"));
  m.def("build_layers",
        [](const std::vector<Vertex>& tuple, const PairColoring& phi, int n,
           int factor, int depth, bool strict_paper) {
          return build_layers(tuple, phi, n, factor, depth, strict_paper);
        },
        py::arg("tuple"), py::arg("phi"), py::arg("n"), py::arg("factor"),
        py::arg("depth"), py::arg("strict_paper") = false);
  m.def("neighbor_indices", &neighbor_indices);
  m.def("check_observation", &check_observation);
  m.def("monotone_witness",
        [](const std::vector<Vertex>& tuple, const MonotoneRun& run,
           const PairColoring& phi) {
          return monotone_witness(tuple, run, phi);
        });

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("relation", &TraceStep::relation)
      .def_readonly("held", &TraceStep::held)
      .def_readonly("quad", &TraceStep::quad);
  py::class_<ExtractionTrace>(m, "ExtractionTrace")
      .def_readonly("kind", &ExtractionTrace::kind)
      .def_readonly("branch", &ExtractionTrace::branch)
      .def_readonly("steps", &ExtractionTrace::steps)
      .def_readonly("edge", &ExtractionTrace::edge);
  m.def("extract_edge",
        [](const std::vector<Vertex>& tuple, const PairColoring& phi, int n,
           int factor, int depth) {
          return extract_edge(tuple, phi, n, factor, depth);
        },
        py::arg("tuple"), py::arg("phi"), py::arg("n"), py::arg("factor"),
        py::arg("depth") = 5);
  m.def("format_trace", &format_trace);
}
