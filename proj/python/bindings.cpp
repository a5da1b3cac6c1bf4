#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thinlab/entropy.hpp"
#include "thinlab/errors.hpp"
#include "thinlab/explorer.hpp"
#include "thinlab/pmf.hpp"
#include "thinlab/thinning.hpp"
#include "thinlab/ulc.hpp"
#include "thinlab/verifiers.hpp"

namespace py = pybind11;
using namespace thinlab;

namespace {

std::string repr_pmf(const Pmf& f) {
    std::string out = "Pmf([";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += format_double(f[i]);
    }
    return out + "])";
}

}  // namespace

PYBIND11_MODULE(_thinlab, m) {
    m.doc() = "Binomial thinning, ultra-log-concave pmfs and discrete entropy power";

    py::register_exception<SupportViolation>(m, "SupportViolation", PyExc_ValueError);
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_ValueError);
    py::register_exception<DegenerateAlpha>(m, "DegenerateAlpha", PyExc_ValueError);

    py::class_<Pmf>(m, "Pmf")
        .def(py::init<std::vector<double>>(), py::arg("weights"))
        .def_static("delta", &Pmf::delta, py::arg("k"))
        .def_property_readonly("weights",
                               [](const Pmf& f) { return f.weights(); })
        .def("__len__", &Pmf::size)
        .def("__getitem__", [](const Pmf& f, std::size_t i) { return f[i]; })
        .def("__eq__", [](const Pmf& a, const Pmf& b) { return a == b; })
        .def("__repr__", &repr_pmf);

    py::class_<EntropyDecomposition>(m, "EntropyDecomposition")
        .def_readonly("h", &EntropyDecomposition::h)
        .def_readonly("d", &EntropyDecomposition::d)
        .def_readonly("l", &EntropyDecomposition::l)
        .def_readonly("rate", &EntropyDecomposition::rate)
        .def("__repr__", [](const EntropyDecomposition& e) {
            return "EntropyDecomposition(h=" + format_double(e.h) + ", d=" + format_double(e.d) +
                   ", l=" + format_double(e.l) + ", rate=" + format_double(e.rate) + ")";
        });

    py::class_<SlackReport>(m, "SlackReport")
        .def_readonly("lhs", &SlackReport::lhs)
        .def_readonly("rhs", &SlackReport::rhs)
        .def_readonly("slack", &SlackReport::slack)
        .def_readonly("tolerance", &SlackReport::tolerance)
        .def_readonly("passed", &SlackReport::pass)
        .def_readonly("conjecture", &SlackReport::conjecture)
        .def_readonly("context", &SlackReport::context)
        .def("__repr__", [](const SlackReport& r) {
            return "SlackReport(slack=" + format_double(r.slack) +
                   (r.pass ? ", pass" : ", FAIL") + (r.conjecture ? ", conjecture)" : ")");
        });

    py::class_<ConvexityReport>(m, "ConvexityReport")
        .def_readonly("alphas", &ConvexityReport::alphas)
        .def_readonly("l_values", &ConvexityReport::l_values)
        .def_readonly("fd_second", &ConvexityReport::fd_second)
        .def_readonly("closed_second", &ConvexityReport::closed_second)
        .def_readonly("min_second", &ConvexityReport::min_second);

    py::class_<SegmentReport>(m, "SegmentReport")
        .def_readonly("ts", &SegmentReport::ts)
        .def_readonly("entropies", &SegmentReport::entropies)
        .def_readonly("second_diffs", &SegmentReport::second_diffs)
        .def_readonly("max_second_diff", &SegmentReport::max_second_diff)
        .def_readonly("disjoint_regime", &SegmentReport::disjoint_regime);

    py::class_<ThinNumbersRow>(m, "ThinNumbersRow")
        .def_readonly("n", &ThinNumbersRow::n)
        .def_readonly("tv_to_poisson", &ThinNumbersRow::tv_to_poisson)
        .def_readonly("entropy", &ThinNumbersRow::entropy)
        .def_readonly("relative_entropy", &ThinNumbersRow::relative_entropy);

    m.def("make_pmf", &make_pmf, py::arg("raw_weights"));
    m.def("convolve", &convolve);
    m.def("n_fold_convolve", &n_fold_convolve, py::arg("f"), py::arg("n"));
    m.def("mean", &mean);
    m.def("total_variation", &total_variation);

    m.def("thin", [](const Pmf& f, double a) { return thin(f, a); }, py::arg("f"),
          py::arg("alpha"));
    m.def("thin_derivative",
          [](const Pmf& f, double a) { return thin_derivative(f, a); }, py::arg("f"),
          py::arg("alpha"));

    m.def("is_ulc", &is_ulc);
    m.def("bernoulli_sum",
          [](const std::vector<double>& params) { return bernoulli_sum(BernoulliSumSpec(params)); },
          py::arg("params"));
    m.def("random_ulc", &random_ulc, py::arg("max_n"), py::arg("seed"));

    m.def("entropy", &entropy);
    m.def("relative_entropy", &relative_entropy);
    m.def("log_poisson_pmf", &log_poisson_pmf, py::arg("i"), py::arg("rate"));
    m.def("poisson_pmf", &poisson_pmf, py::arg("rate"), py::arg("tail_eps") = 1e-15);
    m.def("decompose", &decompose);
    m.def("poisson_entropy", &poisson_entropy, py::arg("t"));
    m.def("entropy_power", &entropy_power);

    m.def("check_concavity_thm2",
          [](const Pmf& f, const Pmf& g, double a, double b) {
              return check_concavity_thm2(f, g, a, b);
          },
          py::arg("f"), py::arg("g"), py::arg("alpha"), py::arg("beta"));
    m.def("check_prop1", [](const Pmf& f, double a) { return check_prop1(f, a); });
    m.def("check_dthin", [](const Pmf& f, double a) { return check_dthin(f, a); });
    m.def("check_d_subadditive", &check_d_subadditive);
    m.def("l_alpha_single", [](const Pmf& f, double a) { return l_alpha_single(f, a); });
    m.def("l_prime_single", [](const Pmf& f, double a) { return l_prime_single(f, a); });
    m.def("l2_single_closed_form",
          [](const Pmf& f, double a) { return l2_single_closed_form(f, a); });
    m.def("l_alpha_two",
          [](const Pmf& f, const Pmf& g, double a) { return l_alpha_two(f, g, a); });
    m.def("l2_closed_form",
          [](const Pmf& f, const Pmf& g, double a) { return l2_closed_form(f, g, a); });
    m.def("ab_kernel",
          [](int i, int j, double alpha, double lam, double mu) {
              const auto v = ab_kernel(ABKernelSample{i, j, alpha, lam, mu});
              return py::make_tuple(v.a_val, v.b_val);
          },
          py::arg("i"), py::arg("j"), py::arg("alpha"), py::arg("lam"), py::arg("mu"));
    m.def("ab_identity_residual",
          [](int i, int j, double alpha, double lam, double mu) {
              return ab_identity_residual(ABKernelSample{i, j, alpha, lam, mu});
          },
          py::arg("i"), py::arg("j"), py::arg("alpha"), py::arg("lam"), py::arg("mu"));
    m.def("convexity_profile_single", &convexity_profile_single, py::arg("f"),
          py::arg("grid_size") = 33);
    m.def("convexity_profile_two", &convexity_profile_two, py::arg("f"), py::arg("g"),
          py::arg("grid_size") = 33);
    m.def("check_shepp_olkin_segment",
          [](const std::vector<double>& a, const std::vector<double>& b, int grid_size) {
              return check_shepp_olkin_segment(BernoulliSumSpec(a), BernoulliSumSpec(b),
                                               grid_size);
          },
          py::arg("a"), py::arg("b"), py::arg("grid_size") = 33);
    m.def("check_thinned_epi",
          [](const Pmf& f, const Pmf& g, double a) { return check_thinned_epi(f, g, a); });
    m.def("check_rtepi", [](const Pmf& f, double a) { return check_rtepi(f, a); });
    m.def("check_prop2",
          [](const Pmf& f, const Pmf& g, double beta, double gamma) {
              return check_prop2(f, g, beta, gamma);
          },
          py::arg("f"), py::arg("g"), py::arg("beta"), py::arg("gamma"));
    m.def("law_of_thin_numbers_trace", &law_of_thin_numbers_trace, py::arg("f"),
          py::arg("n_max"));
    m.def("naive_epi_counterexample", &naive_epi_counterexample);
    m.def("parse_fixture", &parse_fixture, py::arg("spec"));
}
