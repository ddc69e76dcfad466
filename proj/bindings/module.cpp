#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "heaplab/constants.hpp"
#include "heaplab/generate.hpp"
#include "heaplab/golden.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/measures.hpp"
#include "heaplab/potentials.hpp"
#include "heaplab/randomized.hpp"
#include "heaplab/reachability.hpp"
#include "heaplab/text.hpp"
#include "heaplab/verify.hpp"
#include "heaplab/wk.hpp"
#include "heaplab/workload.hpp"

namespace py = pybind11;
using namespace heaplab;

namespace {

py::object min_key_py(const Tree& x) {
  if (x.is_empty()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(x.key());
}

std::vector<std::string> validate_py(const Tree& x, const Strategy& s) {
  std::vector<std::string> out;
  for (const Violation& v : validate(x, s)) out.push_back(v.str());
  return out;
}

py::dict lemma2_py(const Tree& x, const Tree& y) {
  const Lemma2Report r = check_lemma2(x, y);
  py::dict d;
  d["i"] = r.rank_le_prank_le_log;
  d["ii"] = r.rank_meld_between;
  d["iii"] = r.rank_meld_le_max_prank;
  d["iv"] = r.prank_meld_between;
  d["all"] = r.all();
  return d;
}

py::dict measure_py(const Tree& x) {
  const MeasureReport r = measure(x);
  py::dict d;
  d["rank"] = r.rank;
  d["prank"] = r.prank;
  d["size"] = r.size;
  d["sz"] = r.sz;
  d["log2_sz"] = r.log2_sz;
  d["log_phi_sz"] = r.log_phi_sz;
  return d;
}

py::dict aggregates_py(const RunReport& rep) {
  py::dict d;
  d["ops"] = rep.agg.ops;
  d["bounded_ops"] = rep.agg.bounded_ops;
  d["bound_violations"] = rep.agg.bound_violations;
  d["min_slack"] = rep.agg.min_slack;
  d["worst_actual_over_log2_sz"] = rep.agg.worst_actual_over_log2_sz;
  d["mean_amortized"] = rep.agg.mean_amortized;
  d["eq3_checked"] = rep.agg.eq3_checked;
  d["eq3_violations"] = rep.agg.eq3_violations;
  d["eq3_min_slack"] = rep.agg.eq3_min_slack;
  d["telescoping_error"] = rep.agg.telescoping_error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mergeable-heap laboratory: skew, weight-biased, rank-biased and randomized "
            "leftist heaps under one meld kernel, with comparison metering, potential "
            "ledgers and the adversarial tree families.";

  py::register_exception<EmptyHeapError>(m, "EmptyHeapError", PyExc_RuntimeError);
  py::register_exception<TreeParseError>(m, "TreeParseError", PyExc_ValueError);
  py::register_exception<ProgramParseError>(m, "ProgramParseError", PyExc_ValueError);
  py::register_exception<ReplayError>(m, "ReplayError", PyExc_RuntimeError);
  py::register_exception<InvalidHeapError>(m, "InvalidHeapError", PyExc_ValueError);

  m.attr("PHI") = kPhi;
  m.attr("BETA") = kBeta;
  m.attr("ALPHA") = kAlpha;

  py::enum_<StrategyKind>(m, "StrategyKind")
      .value("Skew", StrategyKind::Skew)
      .value("WeightBiased", StrategyKind::WeightBiased)
      .value("RankBiased", StrategyKind::RankBiased)
      .value("Randomized", StrategyKind::Randomized);

  py::enum_<TieBreak>(m, "TieBreak")
      .value("SwapOnTie", TieBreak::SwapOnTie)
      .value("KeepOnTie", TieBreak::KeepOnTie);

  py::class_<Strategy>(m, "Strategy")
      .def_static("skew", &Strategy::skew)
      .def_static("weight_biased", &Strategy::weight_biased,
                  py::arg("tie_break") = TieBreak::SwapOnTie)
      .def_static("rank_biased", &Strategy::rank_biased,
                  py::arg("tie_break") = TieBreak::SwapOnTie)
      .def_static("randomized", &Strategy::randomized, py::arg("p"), py::arg("seed"))
      .def_property_readonly("kind", &Strategy::kind)
      .def_property_readonly("p", &Strategy::p)
      .def_property_readonly("seed", &Strategy::seed)
      .def_property_readonly("draws", &Strategy::draws);

  py::class_<CostMeter>(m, "CostMeter")
      .def(py::init<>())
      .def_readwrite("comparisons", &CostMeter::comparisons)
      .def_readwrite("structural", &CostMeter::structural)
      .def("reset", &CostMeter::reset);

  py::class_<Tree>(m, "Tree")
      .def(py::init<>())
      .def_static("single", &Tree::single, py::arg("key"))
      .def_static("node", &Tree::node, py::arg("left"), py::arg("key"), py::arg("right"))
      .def_property_readonly("is_empty", &Tree::is_empty)
      .def_property_readonly("key", &Tree::key)
      .def_property_readonly("left", &Tree::left)
      .def_property_readonly("right", &Tree::right)
      .def_property_readonly("size", &Tree::size)
      .def_property_readonly("rank", &Tree::rank)
      .def_property_readonly("sz", &Tree::sz)
      .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
      .def("__repr__", [](const Tree& t) { return "Tree(" + to_text(t) + ")"; })
      .def("__str__", [](const Tree& t) { return to_text(t); });

  m.def("empty", &empty);
  m.def("single", &single, py::arg("key"));
  m.def("is_empty", &is_empty, py::arg("x"));
  m.def("min_key", &min_key_py, py::arg("x"),
        "Minimum key, or float('inf') for the empty heap.");
  m.def("bal", &bal, py::arg("t"), py::arg("key"), py::arg("u"), py::arg("strategy"),
        py::arg("meter"));
  m.def("meld", &meld, py::arg("x"), py::arg("y"), py::arg("strategy"), py::arg("meter"));
  m.def("union", &meld, py::arg("x"), py::arg("y"), py::arg("strategy"), py::arg("meter"),
        "Alias of meld.");
  m.def("insert", &insert, py::arg("key"), py::arg("x"), py::arg("strategy"), py::arg("meter"));
  m.def("del_min", &del_min, py::arg("x"), py::arg("strategy"), py::arg("meter"));
  m.def("validate", &validate_py, py::arg("x"), py::arg("strategy"),
        "Violation strings; empty list means structurally valid.");

  m.def("to_text", &to_text, py::arg("x"));
  m.def("tree_from_text", &tree_from_text, py::arg("text"));

  m.def("rank_of", &rank_of, py::arg("x"));
  m.def("prank_of", &prank_of, py::arg("x"));
  m.def("size_of", &size_of, py::arg("x"));
  m.def("sz_of", &sz_of, py::arg("x"));
  m.def("spine_rank", &spine_rank, py::arg("x"));
  m.def("recount_size", &recount_size, py::arg("x"));
  m.def("measure", &measure_py, py::arg("x"));
  m.def("check_lemma2", &lemma2_py, py::arg("x"), py::arg("y"));

  py::enum_<PotentialKind>(m, "PotentialKind")
      .value("Rank", PotentialKind::Rank)
      .value("MinorRank", PotentialKind::MinorRank)
      .value("KSClamped", PotentialKind::KSClamped)
      .value("KSUnclamped", PotentialKind::KSUnclamped)
      .value("STIndicator", PotentialKind::STIndicator)
      .value("Convex", PotentialKind::Convex);

  py::class_<Potential>(m, "Potential")
      .def_static("rank", &Potential::rank)
      .def_static("minor_rank", &Potential::minor_rank)
      .def_static("ks_clamped", &Potential::ks_clamped)
      .def_static("ks_unclamped", &Potential::ks_unclamped)
      .def_static("st_indicator", &Potential::st_indicator)
      .def_static("convex", &Potential::convex, py::arg("lam"), py::arg("a"), py::arg("b"))
      .def_property_readonly("name", &Potential::name)
      .def("__call__", &Potential::operator());

  m.def("potential", py::overload_cast<const Tree&, PotentialKind>(&potential), py::arg("x"),
        py::arg("kind"));
  m.def("node_potential", &node_potential, py::arg("t"), py::arg("u"), py::arg("kind"));
  m.def("check_ks_inequality", &check_ks_inequality, py::arg("m"), py::arg("n"),
        py::arg("tol") = 1e-12);
  m.def(
      "bound_for",
      [](const std::string& op, StrategyKind s, const Potential& pot, std::uint64_t sz_in,
         std::uint64_t sz_out) -> py::object {
        const auto b = bound_for(op, s, pot, sz_in, sz_out);
        return b ? py::cast(*b) : py::none();
      },
      py::arg("op"), py::arg("strategy"), py::arg("potential"), py::arg("sz_input"),
      py::arg("sz_result"));

  py::class_<ShapeTree>(m, "ShapeTree")
      .def(py::init<>())
      .def_static("branch", &ShapeTree::branch, py::arg("left"), py::arg("right"))
      .def_property_readonly("is_leaf", &ShapeTree::is_leaf)
      .def_property_readonly("left", &ShapeTree::left)
      .def_property_readonly("right", &ShapeTree::right)
      .def_property_readonly("size", &ShapeTree::size)
      .def_property_readonly("rank", &ShapeTree::rank)
      .def("__eq__", [](const ShapeTree& a, const ShapeTree& b) { return a == b; })
      .def("__repr__", [](const ShapeTree& t) { return "ShapeTree(" + shape_to_text(t) + ")"; });

  m.def("shape_to_text", &shape_to_text, py::arg("x"));
  m.def(
      "unlabeled_meld",
      [](const ShapeTree& x, const ShapeTree& y) {
        const auto r = unlabeled_meld(x, y);
        return py::make_tuple(r.tree, r.steps);
      },
      py::arg("x"), py::arg("y"), "Returns (tree, steps).");

  py::class_<GoldenTrees>(m, "GoldenTrees")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("n_max") = 1'000'000,
           py::arg("materialize_max") = 10'000)
      .def("l", [](const GoldenTrees& g, std::uint64_t n) { return g.gseq().l(n); })
      .def("r", [](const GoldenTrees& g, std::uint64_t n) { return g.gseq().r(n); })
      .def("tree", &GoldenTrees::tree, py::arg("n"))
      .def("rank", &GoldenTrees::rank, py::arg("n"))
      .def(
          "check_leftist",
          [](const GoldenTrees& g, std::uint64_t n) {
            const auto r = g.check_leftist(n);
            return py::make_tuple(r.weight_ok, r.rank_ok);
          },
          py::arg("n"), "Returns (weight_ok, rank_ok).")
      .def("theorem2_gap", &GoldenTrees::theorem2_gap, py::arg("n"))
      .def_property_readonly("n_max", &GoldenTrees::n_max)
      .def_property_readonly("materialize_max", &GoldenTrees::materialize_max);

  py::class_<WkFamily>(m, "WkFamily")
      .def_readonly("k", &WkFamily::k)
      .def_readonly("t", &WkFamily::t)
      .def_readonly("u", &WkFamily::u)
      .def_readonly("w", &WkFamily::w)
      .def_readonly("v", &WkFamily::v)
      .def_readonly("delmin_comparisons", &WkFamily::delmin_comparisons);

  m.def("perfect_tree", &perfect_tree, py::arg("k"), py::arg("key"));
  m.def("build_wk", &build_wk, py::arg("k"));
  m.def("wk_potential_drop",
        py::overload_cast<const WkFamily&, PotentialKind>(&wk_potential_drop), py::arg("family"),
        py::arg("kind"));
  m.def("wk_eq4_closed_form", &wk_eq4_closed_form, py::arg("k"));

  py::class_<Program>(m, "Program")
      .def(py::init<>())
      .def_static("from_text", &Program::from_text, py::arg("text"))
      .def("to_text", &Program::to_text)
      .def("__len__", &Program::size);

  m.def("preimage", &preimage, py::arg("x"));
  m.def("compile_generation", &compile_generation, py::arg("x"));
  m.def(
      "replay",
      [](const Program& p, const Strategy& s) {
        const auto r = replay(p, s);
        return py::make_tuple(r.tree, r.comparisons);
      },
      py::arg("program"), py::arg("strategy"), "Returns (tree, comparisons).");

  m.def("random_heap", &random_heap, py::arg("kind"), py::arg("n"), py::arg("rng"),
        py::arg("key_lo") = 0, py::arg("key_hi") = 999);
  py::class_<SplitMix64>(m, "SplitMix64")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def("next_u64", &SplitMix64::next_u64)
      .def("next_double", &SplitMix64::next_double)
      .def("next_below", &SplitMix64::next_below, py::arg("n"))
      .def("split", &SplitMix64::split);

  py::enum_<KeyDist>(m, "KeyDist")
      .value("UniformRange", KeyDist::UniformRange)
      .value("Permutation", KeyDist::Permutation);

  py::class_<WorkloadSpec>(m, "WorkloadSpec")
      .def(py::init<>())
      .def_readwrite("strategy", &WorkloadSpec::strategy)
      .def_readwrite("p", &WorkloadSpec::p)
      .def_readwrite("weight_insert", &WorkloadSpec::weight_insert)
      .def_readwrite("weight_union", &WorkloadSpec::weight_union)
      .def_readwrite("weight_del_min", &WorkloadSpec::weight_del_min)
      .def_readwrite("n_ops", &WorkloadSpec::n_ops)
      .def_readwrite("dist", &WorkloadSpec::dist)
      .def_readwrite("key_lo", &WorkloadSpec::key_lo)
      .def_readwrite("key_hi", &WorkloadSpec::key_hi)
      .def_readwrite("seed", &WorkloadSpec::seed);

  m.def(
      "run_workload",
      [](const WorkloadSpec& spec, const Potential& pot) {
        const RunReport rep = run_workload(spec, pot);
        py::dict d;
        d["potential"] = rep.potential_name;
        d["aggregates"] = aggregates_py(rep);
        d["ledger_csv"] = rep.ledger.to_csv();
        return d;
      },
      py::arg("spec"), py::arg("potential"));

  m.def(
      "randomized_sweep",
      [](const std::vector<double>& grid, std::uint64_t n, std::uint64_t trials,
         std::uint64_t seed) {
        py::list rows;
        for (const RandomizedRow& r : randomized_sweep(grid, n, trials, seed)) {
          py::dict d;
          d["p"] = r.p;
          d["n"] = r.n;
          d["trials"] = r.trials;
          d["mean_union"] = r.mean_union;
          d["max_union"] = r.max_union;
          d["mean_union_norm"] = r.mean_union_norm;
          d["ci95_union_norm"] = r.ci95_union_norm;
          d["mean_delmin"] = r.mean_delmin;
          d["max_delmin"] = r.max_delmin;
          d["mean_delmin_norm"] = r.mean_delmin_norm;
          d["ci95_delmin_norm"] = r.ci95_delmin_norm;
          rows.append(d);
        }
        return rows;
      },
      py::arg("p_grid"), py::arg("n"), py::arg("trials"), py::arg("seed"));

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t scale, std::uint64_t seed) {
        py::list rows;
        for (const CheckResult& r : run_suite(suite, scale, seed)) {
          py::dict d;
          d["suite"] = r.suite;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["worst"] = r.worst;
          d["detail"] = r.detail;
          rows.append(d);
        }
        return rows;
      },
      py::arg("suite"), py::arg("scale") = 0, py::arg("seed") = 1);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
