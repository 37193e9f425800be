#include "partfn/asymptotics.hpp"
#include "partfn/dedekind.hpp"
#include "partfn/errors.hpp"
#include "partfn/exact_partition.hpp"
#include "partfn/farey.hpp"
#include "partfn/series.hpp"
#include "partfn/special_functions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>

namespace py = pybind11;
using namespace partfn;

namespace {

py::int_ to_py(const mpz_class& v) {
    const std::string digits = v.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::tuple to_py(const ExactRational& q) { return py::make_tuple(to_py(q.num()), to_py(q.den())); }

py::tuple to_py(const ExactComplex& z) { return py::make_tuple(to_py(z.re), to_py(z.im)); }

std::string sci(const Real& x, int digits = 25) { return x.to_scientific(digits); }

int default_digits(unsigned bits) { return std::max(1, static_cast<int>(bits * 0.30103) - 4); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Partition function p(n): exact, series and asymptotic evaluation";

    py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "CacheIoError", PyExc_OSError);
    py::register_exception<ParseError>(m, "CacheParseError", PyExc_ValueError);
    py::register_exception<GapError>(m, "CacheGapError", PyExc_ValueError);

    m.def("p_exact", [](std::uint64_t n) { return to_py(p_exact(n)); }, py::arg("n"));
    m.def("p_oracle_dp", [](std::uint64_t n) { return to_py(p_oracle_dp(n)); }, py::arg("n"));
    m.def("pentagonal", [](std::uint64_t k) {
        const auto p = pentagonal(k);
        return py::make_tuple(p.first, p.second);
    }, py::arg("k"));
    m.def("partition_table", [](std::uint64_t n) {
        PartitionCache cache;
        cache.extend_to(n);
        py::list out;
        for (const auto& v : cache.values()) out.append(to_py(v));
        return out;
    }, py::arg("n"));

    m.def("p_series", [](std::uint64_t n, std::optional<std::int64_t> terms, std::optional<unsigned> prec) {
        SeriesOptions opts;
        opts.initial_terms = terms;
        opts.prec = prec;
        const SeriesReport r = p_series(n, opts);
        py::list term_list;
        for (const auto& t : r.terms) {
            py::dict d;
            d["k"] = t.k;
            d["a_k"] = sci(t.a_k, 20);
            d["r_k"] = sci(t.r_k, 20);
            term_list.append(d);
        }
        py::dict out;
        out["n"] = r.n;
        out["prec"] = r.prec;
        out["n_terms_used"] = r.n_terms_used;
        out["partial_sum"] = r.partial_sum.to_fixed(20);
        out["rounded"] = to_py(r.rounded);
        out["gap"] = sci(r.gap, 20);
        out["terms"] = term_list;
        return out;
    }, py::arg("n"), py::arg("terms") = py::none(), py::arg("prec") = py::none());

    m.def("dedekind_sum", [](std::int64_t h, std::int64_t k) { return to_py(dedekind_sum(h, k)); }, py::arg("h"),
          py::arg("k"));
    m.def("a_k", [](std::int64_t k, std::uint64_t n, unsigned prec) {
        return a_k(k, n, PrecisionContext(prec)).value.to_fixed(default_digits(prec));
    }, py::arg("k"), py::arg("n"), py::arg("prec") = 128);

    m.def("farey", [](std::int64_t order) {
        py::list out;
        for (const auto& f : farey(order).entries) out.append(py::make_tuple(f.h, f.k));
        return out;
    }, py::arg("order"));
    m.def("ford_chords", [](std::int64_t order) {
        py::list out;
        for (const auto& c : chords(order)) {
            py::dict d;
            d["k"] = c.k;
            d["k1"] = c.k1;
            d["k2"] = c.k2;
            d["w1"] = to_py(c.w1);
            d["w2"] = to_py(c.w2);
            d["bounds_ok"] = chord_bounds_check(c);
            out.append(d);
        }
        return out;
    }, py::arg("order"));

    m.def("l_n", [](std::uint64_t n, unsigned prec) { return sci(l_n(n, PrecisionContext(prec))); }, py::arg("n"),
          py::arg("prec") = 128);
    m.def("relative_error_table", [](const std::vector<std::uint64_t>& ns, unsigned prec) {
        PartitionCache cache;
        py::list out;
        for (const auto& row : relative_error_table(ns, cache, PrecisionContext(prec))) {
            py::dict d;
            d["n"] = row.n;
            d["p_n"] = to_py(row.p_n);
            d["L_n"] = sci(row.l_n);
            d["eps_percent"] = row.eps_display();
            d["eps_percent_full"] = sci(row.eps_percent);
            out.append(d);
        }
        return out;
    }, py::arg("ns"), py::arg("prec") = 128);

    m.def("bessel_i_3_2", [](const std::string& x, unsigned prec) -> py::tuple {
        const PrecisionContext ctx(prec);
        const Real xr = Real::parse(x, prec);
        const Real series = bessel_i_series(1.5, xr, ctx);
        if (xr.is_zero()) return py::make_tuple(sci(series), py::none());
        return py::make_tuple(sci(series), sci(bessel_i_3_2_closed(xr, ctx)));
    }, py::arg("x"), py::arg("prec") = 128);

    m.def("verify_eta", [](std::int64_t c, std::int64_t d, const std::string& re, const std::string& im, unsigned prec) {
        const ModularMatrix mat = complete_modular_matrix(c, d);
        const Complex tau(Real::parse(re, prec), Real::parse(im, prec));
        return verify_eta(mat, tau, PrecisionContext(prec)).residual.to_double();
    }, py::arg("c"), py::arg("d"), py::arg("tau_re"), py::arg("tau_im"), py::arg("prec") = 128);
    m.def("verify_F_transform", [](std::int64_t h, std::int64_t k, const std::string& re, const std::string& im,
                                   unsigned prec) {
        const Complex z(Real::parse(re, prec), Real::parse(im, prec));
        return verify_F_transform(h, k, z, PrecisionContext(prec)).to_double();
    }, py::arg("h"), py::arg("k"), py::arg("z_re"), py::arg("z_im"), py::arg("prec") = 128);
}
