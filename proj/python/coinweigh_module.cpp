#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coinweigh/bounds.hpp"
#include "coinweigh/construct.hpp"
#include "coinweigh/nontight.hpp"
#include "coinweigh/search.hpp"
#include "coinweigh/sequences.hpp"
#include "coinweigh/special.hpp"
#include "coinweigh/verify.hpp"

namespace py = pybind11;
using namespace coinweigh;

namespace {

std::string weighing_repr(const Weighing& w) {
  return "Weighing([" + format_multiplicities(w) + "])";
}

}  // namespace

PYBIND11_MODULE(_coinweigh, m) {
  m.doc() = "Balance-scale weighings that confirm coin-bag labels in one go";

  py::register_exception<LengthMismatch>(m, "LengthMismatchError", PyExc_ValueError);
  py::register_exception<Overflow>(m, "OverflowDomainError", PyExc_OverflowError);
  py::register_exception<OutOfRange>(m, "OutOfRangeError", PyExc_ValueError);
  py::register_exception<NotDownhill>(m, "NotDownhillError", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<Infeasible>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<NotExists>(m, "NotExistsError", PyExc_ValueError);
  py::register_exception<NetworkUnavailable>(m, "NetworkUnavailableError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "BFileParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceededError", PyExc_RuntimeError);

  py::enum_<Outcome>(m, "Outcome")
      .value("BALANCE", Outcome::Balance)
      .value("LEFT_LIGHTER", Outcome::LeftLighter)
      .value("LEFT_HEAVIER", Outcome::LeftHeavier);

  py::class_<Weighing>(m, "Weighing")
      .def(py::init([](std::vector<Int> mult) {
             const Int n = static_cast<Int>(mult.size());
             return make_weighing(n, std::move(mult));
           }),
           py::arg("multiplicities"))
      .def_property_readonly("n", &Weighing::n)
      .def_readonly("multiplicities", &Weighing::multiplicities)
      .def("__repr__", &weighing_repr)
      .def("__eq__", [](const Weighing& a, const Weighing& b) {
        return a.multiplicities == b.multiplicities;
      });

  py::class_<Classification>(m, "Classification")
      .def_readonly("outcome", &Classification::outcome)
      .def_readonly("signed_total", &Classification::signed_total)
      .def_readonly("total_coins", &Classification::total_coins)
      .def_readonly("total_weight", &Classification::total_weight)
      .def_readonly("downhill", &Classification::downhill)
      .def_readonly("tight", &Classification::tight)
      .def_readonly("primitive", &Classification::primitive)
      .def_readonly("has_duplicates", &Classification::has_duplicates)
      .def_readonly("separation_point", &Classification::separation_point);

  m.def("make_weighing", &make_weighing, py::arg("n"), py::arg("multiplicities"));
  m.def("classify", &classify, py::arg("weighing"));
  m.def("scale", &scale, py::arg("weighing"), py::arg("k"));
  m.def("render", &render, py::arg("weighing"));
  m.def("parse_rendered", &parse_rendered, py::arg("n"), py::arg("text"));
  m.def("parse_multiplicity_list", &parse_multiplicity_list, py::arg("text"));

  py::enum_<VerifyMethod>(m, "VerifyMethod")
      .value("FAST_PATH_DOWNHILL_BALANCE", VerifyMethod::FastPathDownhillBalance)
      .value("FAST_PATH_TIGHT_DOWNHILL", VerifyMethod::FastPathTightDownhill)
      .value("FAST_PATH_DUPLICATES", VerifyMethod::FastPathDuplicates)
      .value("BRUTE_FORCE", VerifyMethod::BruteForce);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("verifying", &VerifyReport::verifying)
      .def_readonly("method", &VerifyReport::method)
      .def_readonly("counterexample", &VerifyReport::counterexample)
      .def_readonly("permutations_checked", &VerifyReport::permutations_checked);

  m.def("is_verifying", &is_verifying, py::arg("weighing"), py::arg("cap") = kDefaultOracleCap);
  m.def("is_verifying_bruteforce", &is_verifying_bruteforce, py::arg("weighing"),
        py::arg("cap") = kDefaultOracleCap);
  m.def("min_gap", &min_gap, py::arg("weighing"));

  py::class_<BoundingWeights>(m, "BoundingWeights")
      .def_readonly("w_left", &BoundingWeights::w_left)
      .def_readonly("w_right", &BoundingWeights::w_right)
      .def_readonly("w_bounding", &BoundingWeights::w_bounding);

  py::class_<BoundsReport>(m, "BoundsReport")
      .def_readonly("n", &BoundsReport::n)
      .def_readonly("s_star", &BoundsReport::s_star)
      .def_readonly("w_left", &BoundsReport::w_left)
      .def_readonly("w_right", &BoundsReport::w_right)
      .def_readonly("w_bounding", &BoundsReport::w_bounding)
      .def_readonly("coin_floor", &BoundsReport::coin_floor)
      .def_readonly("coin_ceiling", &BoundsReport::coin_ceiling);

  m.def("bounding_weights", &bounding_weights, py::arg("s"), py::arg("n"));
  m.def("min_bounding_weight", &min_bounding_weight, py::arg("n"));
  m.def("closed_form_min_weight", &closed_form_min_weight, py::arg("n"));
  m.def("coin_floor", &coin_floor, py::arg("s"), py::arg("n"));
  m.def("coin_bounds", &coin_bounds, py::arg("n"));
  m.def("naive_bound", &naive_bound, py::arg("n"));
  m.def("bounds_report", &bounds_report, py::arg("n"));

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::value)
      .def("ceil", &Rational::ceil);

  py::class_<NonTightReport>(m, "NonTightReport")
      .def_readonly("n", &NonTightReport::n)
      .def_readonly("s_prime", &NonTightReport::s_prime)
      .def_readonly("weight_floor", &NonTightReport::weight_floor)
      .def_readonly("coin_floor", &NonTightReport::coin_floor)
      .def_readonly("dominated", &NonTightReport::dominated);

  m.def("nontight_coin_floor", &nontight_coin_floor, py::arg("n"));
  m.def("nontight_weight_floor", &nontight_weight_floor, py::arg("n"));
  m.def("dominance_table", &dominance_table, py::arg("n_from"), py::arg("n_to"));

  py::enum_<CaseTag>(m, "CaseTag")
      .value("TINY", CaseTag::Tiny)
      .value("MOD1_BALANCE", CaseTag::Mod1Balance)
      .value("MOD0_TIGHT_IMBALANCE", CaseTag::Mod0TightImbalance)
      .value("MOD2_ODD_BALANCE", CaseTag::Mod2OddBalance)
      .value("MOD2_EVEN_BALANCE", CaseTag::Mod2EvenBalance)
      .value("MOD2_EXCEPTION", CaseTag::Mod2Exception);

  py::enum_<Pan>(m, "Pan").value("LEFT", Pan::Left).value("RIGHT", Pan::Right);

  py::class_<AddedGroup>(m, "AddedGroup")
      .def_readonly("pan", &AddedGroup::pan)
      .def_readonly("group_size", &AddedGroup::group_size)
      .def_readonly("copies", &AddedGroup::copies);

  py::class_<Construction>(m, "Construction")
      .def_readonly("weighing", &Construction::weighing)
      .def_readonly("case_tag", &Construction::case_tag)
      .def_readonly("added_groups", &Construction::added_groups);

  py::class_<TriangularDecomposition>(m, "TriangularDecomposition")
      .def_readonly("indices", &TriangularDecomposition::indices)
      .def("triangular_sum", &TriangularDecomposition::triangular_sum)
      .def("index_sum", &TriangularDecomposition::index_sum);

  py::class_<Eq5Solution>(m, "Eq5Solution")
      .def_readonly("n", &Eq5Solution::n)
      .def_readonly("groups", &Eq5Solution::groups)
      .def("count_sum", &Eq5Solution::count_sum)
      .def("triangular_sum", &Eq5Solution::triangular_sum);

  py::class_<ExceptionEntry>(m, "ExceptionEntry")
      .def_readonly("weighing", &ExceptionEntry::weighing)
      .def_readonly("weight", &ExceptionEntry::weight)
      .def_readonly("coins", &ExceptionEntry::coins);

  m.def("base_ladder", &base_ladder, py::arg("s"), py::arg("n"));
  m.def("decompose_triangular_le3", &decompose_triangular_le3, py::arg("target"),
        py::arg("max_index"));
  m.def("solve_eq5", &solve_eq5, py::arg("n"));
  m.def("plus42_lift", &plus42_lift, py::arg("solution"));
  m.def("exception_lookup", &exception_lookup, py::arg("n"));
  m.def("construct_weight_optimal", &construct_weight_optimal, py::arg("n"));

  py::enum_<SoloVariant>(m, "SoloVariant")
      .value("ZERO_BASED", SoloVariant::ZeroBased)
      .value("ONE_BASED", SoloVariant::OneBased);

  py::enum_<SoloKind>(m, "SoloKind")
      .value("BALANCE", SoloKind::Balance)
      .value("TIGHT_IMBALANCE", SoloKind::TightImbalance);

  py::class_<SoloWeighing>(m, "SoloWeighing")
      .def_readonly("weighing", &SoloWeighing::weighing)
      .def_readonly("kind", &SoloWeighing::kind);

  m.def("construct_solo", &construct_solo, py::arg("n"), py::arg("variant"));
  m.def("solo_cost", &solo_cost, py::arg("n"), py::arg("variant"));
  m.def("construct_ap", &construct_ap, py::arg("n"), py::arg("d"));

  py::enum_<Objective>(m, "Objective")
      .value("WEIGHT", Objective::Weight)
      .value("COINS", Objective::Coins);

  py::enum_<Restriction>(m, "Restriction")
      .value("DOWNHILL_BALANCED_OR_TIGHT", Restriction::DownhillBalancedOrTight)
      .value("DOWNHILL_INCLUDE_NONTIGHT", Restriction::DownhillIncludeNonTight)
      .value("ALL_WEIGHINGS_VIA_ORACLE", Restriction::AllWeighingsViaOracle);

  py::class_<SearchOptions>(m, "SearchOptions")
      .def(py::init<>())
      .def_readwrite("witness_limit", &SearchOptions::witness_limit)
      .def_readwrite("threads", &SearchOptions::threads)
      .def_readwrite("timeout_seconds", &SearchOptions::timeout_seconds)
      .def_readwrite("include_nontight", &SearchOptions::include_nontight)
      .def_readwrite("oracle_cap", &SearchOptions::oracle_cap);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("n", &SearchResult::n)
      .def_readonly("objective", &SearchResult::objective)
      .def_readonly("optimum", &SearchResult::optimum)
      .def_readonly("witnesses", &SearchResult::witnesses)
      .def_readonly("proven", &SearchResult::proven)
      .def_readonly("restriction", &SearchResult::restriction)
      .def_readonly("nodes_explored", &SearchResult::nodes_explored);

  m.def("default_search_cap", &default_search_cap, py::arg("n"), py::arg("objective"));
  m.def(
      "search_downhill",
      [](Int n, Objective obj, std::optional<Int> cap, const SearchOptions& opts) {
        return search_downhill(n, obj, cap ? *cap : default_search_cap(n, obj), opts);
      },
      py::arg("n"), py::arg("objective"), py::arg("cap") = py::none(),
      py::arg("options") = SearchOptions{},
      py::call_guard<py::gil_scoped_release>());
  m.def("search_all_oracle", &search_all_oracle, py::arg("n"), py::arg("objective"),
        py::arg("multiplicity_cap"), py::arg("objective_cap"),
        py::arg("options") = SearchOptions{}, py::call_guard<py::gil_scoped_release>());

  py::enum_<SequenceSource>(m, "SequenceSource")
      .value("FORMULA", SequenceSource::Formula)
      .value("EXCEPTION_TABLE", SequenceSource::ExceptionTable);

  py::class_<SequenceRecord>(m, "SequenceRecord")
      .def_readonly("n", &SequenceRecord::n)
      .def_readonly("w_bounding", &SequenceRecord::w_bounding)
      .def_readonly("w_min", &SequenceRecord::w_min)
      .def_readonly("coin_floor", &SequenceRecord::coin_floor)
      .def_readonly("coin_ceiling", &SequenceRecord::coin_ceiling)
      .def_readonly("source", &SequenceRecord::source);

  m.def("sequence_table", &sequence_table, py::arg("n_from"), py::arg("n_to"));
  m.def("golden_diff_mismatches", &golden_diff_mismatches);

  py::enum_<OeisStatus>(m, "OeisStatus")
      .value("MATCH", OeisStatus::Match)
      .value("MISMATCH", OeisStatus::Mismatch)
      .value("UNAVAILABLE", OeisStatus::Unavailable);

  py::class_<OeisOptions>(m, "OeisOptions")
      .def(py::init<>())
      .def_readwrite("cache_dir", &OeisOptions::cache_dir)
      .def_readwrite("offline", &OeisOptions::offline);

  py::class_<OeisCheck>(m, "OeisCheck")
      .def_readonly("sequence_id", &OeisCheck::sequence_id)
      .def_readonly("offset_map", &OeisCheck::offset_map)
      .def_readonly("matched_terms", &OeisCheck::matched_terms)
      .def_readonly("status", &OeisCheck::status)
      .def_readonly("first_bad_index", &OeisCheck::first_bad_index)
      .def_readonly("detail", &OeisCheck::detail);

  m.def("oeis_fetch", &oeis_fetch, py::arg("sequence_id"), py::arg("options") = OeisOptions{});
  m.def("oeis_compare", &oeis_compare, py::arg("sequence_id"), py::arg("local_terms"),
        py::arg("alignment"), py::arg("options") = OeisOptions{});
  m.def("run_named_oeis_checks", &run_named_oeis_checks, py::arg("options") = OeisOptions{});
}
