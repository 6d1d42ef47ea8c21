#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motso/gf2.hpp"
#include "motso/milnor.hpp"
#include "motso/motivic.hpp"
#include "motso/parse.hpp"
#include "motso/rings.hpp"
#include "motso/verify.hpp"
#include "motso/weightfilt.hpp"

namespace py = pybind11;
using namespace motso;

namespace {

gf2::F2Matrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    gf2::F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] & 1);
    }
    return m;
}

std::vector<int> vec_to_list(const gf2::BitVec& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
    return out;
}

py::list table_to_list(const motivic::DimTable& t) {
    py::list out;
    for (const auto& [key, v] : t.entries()) {
        py::dict e;
        e["degree"] = key.first;
        e["twist"] = key.second;
        e["dim"] = v;
        out.append(e);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "mod-2 cohomology of BO_n/BSO_n: weight filtrations, Milnor operations, "
              "and the kernel of the realization map";

    // GF(2) linear algebra
    m.def("rank", [](const std::vector<std::vector<int>>& rows) {
        return gf2::rank(matrix_from_rows(rows));
    }, py::arg("rows"), "GF(2) rank of a 0/1 matrix given as a list of rows");
    m.def("kernel_basis", [](const std::vector<std::vector<int>>& rows) {
        std::vector<std::vector<int>> out;
        for (const auto& v : gf2::kernel_basis(matrix_from_rows(rows))) out.push_back(vec_to_list(v));
        return out;
    }, py::arg("rows"));
    m.def("solve", [](const std::vector<std::vector<int>>& rows, const std::vector<int>& b) -> py::object {
        gf2::BitVec rhs(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, b[i] & 1);
        auto x = gf2::solve(matrix_from_rows(rows), rhs);
        if (!x) return py::none();
        return py::cast(vec_to_list(*x));
    }, py::arg("rows"), py::arg("b"));

    // Milnor operations
    m.def("qop", [](int k, int n, const std::string& cls) {
        auto q = milnor::apply_Q(k, parse::parse_x_class(cls, std::size_t(n)));
        return poly::is_symmetric(q) ? parse::print_monomial_basis(q) : parse::print_x(q);
    }, py::arg("k"), py::arg("n"), py::arg("cls"), "apply Q_k to a class in F2[x_1..x_n]");
    m.def("qop_so", [](int k, int n, const std::string& cls) {
        auto bso = rings::RingPresentation::bso(n);
        auto p = parse::parse_generator_class(cls, bso.gen_names());
        poly::detail::MonomialList shifted;
        for (const auto& mono : p.monomials()) {
            poly::ExponentVector e(std::size_t(n), 0);
            for (std::size_t s = 0; s < mono.size(); ++s) e[s + 1] = mono[s];
            shifted.push_back(std::move(e));
        }
        auto q = milnor::apply_Q_so(k, poly::WPoly::from_monomials(std::size_t(n), std::move(shifted)),
                                    std::size_t(n));
        poly::detail::MonomialList back;
        for (const auto& mono : q.monomials())
            back.push_back(poly::ExponentVector(mono.begin() + 1, mono.end()));
        return parse::print_w(poly::WPoly::from_monomials(bso.ngens(), std::move(back)),
                              bso.gen_names());
    }, py::arg("k"), py::arg("n"), py::arg("cls"), "apply Q_k in the BSO_n presentation");

    // weights
    m.def("weight", [](const std::string& group, const std::string& cls) {
        auto model = motivic::parse_model(group);
        if (model.kind() == motivic::Model::Kind::BO) {
            auto p = parse::parse_x_class(cls, std::size_t(model.n()));
            return wfilt::weight_bo(std::size_t(model.n()), p);
        }
        if (model.kind() == motivic::Model::Kind::BOQuot) {
            auto R = rings::RingPresentation::quot_bo(model.n(), 1);
            auto p = parse::parse_generator_class(cls, R.gen_names());
            return wfilt::weight_in_quotient(R, p, R.degree(p));
        }
        auto R = rings::RingPresentation::bso(model.n());
        return wfilt::weight_bso(model.n(), parse::parse_generator_class(cls, R.gen_names()));
    }, py::arg("group"), py::arg("cls"));

    // Wilson basis
    m.def("wilson_basis", [](int n, int d) {
        py::list out;
        for (const auto& e : wfilt::wilson_basis(std::size_t(n), d)) {
            py::dict row;
            row["lambda"] = e.lambda.to_string();
            row["applied_qs"] = e.applied_qs;
            row["weight"] = e.weight();
            out.append(row);
        }
        return out;
    }, py::arg("n"), py::arg("d"));

    // dimension tables
    m.def("dims", [](const std::string& group, int maxdeg) {
        auto model = motivic::parse_model(group);
        if (model.kind() == motivic::Model::Kind::SO && model.n() % 2 == 0 && model.n() >= 4)
            model = model.with_torsion(motivic::compute_Y(model.n() / 2, maxdeg).table);
        py::list out;
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j) {
                py::dict e;
                e["degree"] = d;
                e["twist"] = j;
                e["dim"] = model.motivic_dim(d, j);
                e["torsion_dim"] = model.torsion_dim(d, j);
                out.append(e);
            }
        return out;
    }, py::arg("group"), py::arg("maxdeg"));
    m.def("kernel_table", [](int m, int maxdeg) {
        return table_to_list(motivic::compute_Y(m, maxdeg).table);
    }, py::arg("m"), py::arg("maxdeg"), "computed dims of Ker t on BSO_{2m}");
    m.def("kernel_closed_form", [](int m, int maxdeg) {
        motivic::TorsionModule tm(m);
        motivic::DimTable t;
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j) t.add(d, j, tm.hilbert(d, j));
        return table_to_list(t);
    }, py::arg("m"), py::arg("maxdeg"));

    // verification entry points
    m.def("verify_theorem", [](int m, int maxdeg, bool perturbed) {
        return motivic::verify_main_theorem(m, maxdeg, perturbed).all_pass();
    }, py::arg("m"), py::arg("maxdeg"), py::arg("perturbed") = false);
    m.def("verify_wilson", [](int n, int maxdeg) {
        return verify::wilson_range(std::size_t(n), maxdeg).all_pass();
    }, py::arg("n"), py::arg("maxdeg"));
    m.def("verify_milnor_laws", [](int samples, unsigned seed) {
        return verify::milnor_laws(samples, seed).pass();
    }, py::arg("samples") = 1000, py::arg("seed") = 20240802u);

    m.attr("__version__") = "0.1.0";
}
