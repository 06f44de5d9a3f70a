// Python bindings for the floorset core: the report structs map to small
// readonly classes, blocks stream as an iterator, and 128-bit sums convert
// to Python ints losslessly.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "floorset/classify.hpp"
#include "floorset/divisibility.hpp"
#include "floorset/exactint.hpp"
#include "floorset/floorset.hpp"
#include "floorset/psi_analysis.hpp"

namespace py = pybind11;
using namespace floorset;

namespace {

py::object u128_to_pyint(uint128 v) {
    // via the decimal string; exact for the full 128-bit range
    return py::int_(py::str(to_decimal(v)));
}

class BlockIter {
public:
    explicit BlockIter(std::uint64_t x) : range_(x), it_(range_.begin()) {}

    QuotientBlock next() {
        if (it_ == std::default_sentinel) throw py::stop_iteration();
        QuotientBlock b = *it_;
        ++it_;
        return b;
    }

private:
    BlockRange range_;
    BlockRange::iterator it_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Floor-quotient set S(X) = {X//n : 1 <= n <= X}: closed-form "
              "cardinality, O(sqrt X) block enumeration, divisibility subsets, "
              "sawtooth-sum analysis and primality classification.";

    py::class_<QuotientBlock>(m, "QuotientBlock")
        .def_readonly("v", &QuotientBlock::v)
        .def_readonly("n_lo", &QuotientBlock::n_lo)
        .def_readonly("n_hi", &QuotientBlock::n_hi)
        .def("__repr__", [](const QuotientBlock& b) {
            std::ostringstream os;
            os << "QuotientBlock(v=" << b.v << ", n_lo=" << b.n_lo
               << ", n_hi=" << b.n_hi << ")";
            return os.str();
        });

    py::class_<FloorSetSummary>(m, "FloorSetSummary")
        .def_readonly("x", &FloorSetSummary::x)
        .def_readonly("b_floor", &FloorSetSummary::b_floor)
        .def_readonly("card_closed", &FloorSetSummary::card_closed)
        .def_readonly("card_enumerated", &FloorSetSummary::card_enumerated)
        .def_readonly("gap_two_sqrt", &FloorSetSummary::gap_two_sqrt);

    py::class_<DecompositionReport>(m, "DecompositionReport")
        .def_readonly("s1_max", &DecompositionReport::s1_max)
        .def_readonly("s2_values", &DecompositionReport::s2_values)
        .def_readonly("intersection_size", &DecompositionReport::intersection_size)
        .def_readonly("reassembled_cardinality",
                      &DecompositionReport::reassembled_cardinality);

    py::class_<DivisorSumReport>(m, "DivisorSumReport")
        .def_readonly("x", &DivisorSumReport::x)
        .def_property_readonly(
            "exact_sum", [](const DivisorSumReport& r) { return u128_to_pyint(r.exact_sum); })
        .def_readonly("asymptotic_main", &DivisorSumReport::asymptotic_main)
        .def_readonly("abs_error", &DivisorSumReport::abs_error);

    py::class_<DivisibilityReport>(m, "DivisibilityReport")
        .def_readonly("x", &DivisibilityReport::x)
        .def_readonly("d", &DivisibilityReport::d)
        .def_readonly("cardinality", &DivisibilityReport::cardinality)
        .def_readonly("lower_bound_exact", &DivisibilityReport::lower_bound_exact)
        .def_readonly("upper_bound_exact", &DivisibilityReport::upper_bound_exact)
        .def_readonly("ratio_to_expected", &DivisibilityReport::ratio_to_expected);

    py::class_<PsiLedger>(m, "PsiLedger")
        .def_readonly("x", &PsiLedger::x)
        .def_readonly("d", &PsiLedger::d)
        .def_readonly("r_max", &PsiLedger::r_max)
        .def_readonly("leading_term", &PsiLedger::leading_term)
        .def_readonly("s1_term_sum", &PsiLedger::s1_term_sum)
        .def_readonly("psi_double_sum", &PsiLedger::psi_double_sum)
        .def_readonly("sd_plus_count", &PsiLedger::sd_plus_count)
        .def_readonly("sd_minus_count", &PsiLedger::sd_minus_count)
        .def_readonly("exact_cardinality", &PsiLedger::exact_cardinality)
        .def_readonly("residual", &PsiLedger::residual);

    py::class_<ClassificationReport>(m, "ClassificationReport")
        .def_readonly("x", &ClassificationReport::x)
        .def_readonly("units", &ClassificationReport::units)
        .def_readonly("primes", &ClassificationReport::primes)
        .def_readonly("semiprimes", &ClassificationReport::semiprimes)
        .def_readonly("other", &ClassificationReport::other)
        .def_readonly("total", &ClassificationReport::total);

    py::enum_<ValueClass>(m, "ValueClass")
        .value("unit", ValueClass::unit)
        .value("prime", ValueClass::prime)
        .value("semiprime", ValueClass::semiprime)
        .value("other", ValueClass::other);

    py::class_<BlockIter>(m, "BlockStream")
        .def("__iter__", [](BlockIter& s) -> BlockIter& { return s; })
        .def("__next__", &BlockIter::next);

    m.def("isqrt", &isqrt, py::arg("y"), "Floor integer square root.");
    m.def("checked_mul",
          [](std::uint64_t a, std::uint64_t b) -> py::object {
              auto p = checked_mul(a, b);
              return p ? py::cast(*p) : py::none();
          },
          py::arg("a"), py::arg("b"),
          "Exact 64-bit product, or None on overflow.");
    m.def("floor_b", &floor_b, py::arg("x"),
          "Largest m with m*(m+1) <= X.");
    m.def("cardinality_closed", &cardinality_closed, py::arg("x"),
          "|S(X)| by the closed form.");
    m.def("block_count", &block_count, py::arg("x"));
    m.def("blocks", [](std::uint64_t x) { return BlockIter(x); }, py::arg("x"),
          "Lazy iterator over the quotient blocks of X.");
    m.def("collect_blocks", &collect_blocks, py::arg("x"));
    m.def("brute_force_set", &brute_force_set, py::arg("x"),
          py::arg("oracle_cap") = kDefaultOracleCap);
    m.def("summarize", &summarize, py::arg("x"));
    m.def("decompose", &decompose, py::arg("x"));
    m.def("divisor_summatory", &divisor_summatory, py::arg("x"));
    m.def("tau_oracle", &tau_oracle, py::arg("x"),
          py::arg("oracle_cap") = kDefaultOracleCap);
    m.def("sd_cardinality", &sd_cardinality, py::arg("x"), py::arg("d"));
    m.def("sd_brute", &sd_brute, py::arg("x"), py::arg("d"),
          py::arg("oracle_cap") = kDefaultOracleCap);
    m.def("divisibility_report", &divisibility_report, py::arg("x"), py::arg("d"));
    m.def("trivial_bounds", &trivial_bounds, py::arg("x"), py::arg("d"));
    m.def("psi", &psi, py::arg("num"), py::arg("den"),
          "Sawtooth psi(num/den) with the fractional part taken exactly.");
    m.def("lemma_double_sum", &lemma_double_sum, py::arg("x"), py::arg("d"));
    m.def("s1_term_sum", &s1_term_sum, py::arg("x"), py::arg("d"));
    m.def("build_ledger", &build_ledger, py::arg("x"), py::arg("d"));
    m.def("is_prime", &is_prime, py::arg("n"),
          "Deterministic 64-bit primality test.");
    m.def("classify_value", &classify_value, py::arg("n"));
    m.def("classify_set", &classify_set, py::arg("x"));

    m.attr("MAX_X") = kMaxX;
    m.attr("DEFAULT_ORACLE_CAP") = kDefaultOracleCap;
    m.attr("__version__") = "0.1.0";
}
