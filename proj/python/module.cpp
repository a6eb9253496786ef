#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "demazure/basis.hpp"
#include "demazure/expr.hpp"
#include "demazure/insertion.hpp"
#include "demazure/polytope.hpp"
#include "demazure/products.hpp"
#include "demazure/ssaf.hpp"

namespace py = pybind11;
using namespace demazure;

namespace {

// Polynomials cross the boundary as {exponent tuple: coefficient}.
py::dict poly_to_dict(const Polynomial& f) {
    py::dict d;
    for (const auto& [e, c] : f.terms()) d[py::tuple(py::cast(e))] = c;
    return d;
}

Polynomial dict_to_poly(const py::dict& d) {
    Polynomial f;
    for (const auto& [key, value] : d) {
        Exponents e = key.cast<Exponents>();
        f.add_term(std::move(e), value.cast<Coeff>());
    }
    return f;
}

py::dict expansion_to_dict(const std::map<WeakComposition, Coeff, CompositionGreater>& coeffs) {
    py::dict d;
    for (const auto& [idx, c] : coeffs) d[py::tuple(py::cast(idx.parts))] = c;
    return d;
}

OperatorKind kind_of(const std::string& name) {
    if (name == "partial") return OperatorKind::partial;
    if (name == "pi") return OperatorKind::pi;
    if (name == "theta") return OperatorKind::theta;
    if (name == "swap") return OperatorKind::swap;
    throw std::invalid_argument("operator must be partial, pi, theta or swap");
}

} // namespace

PYBIND11_MODULE(_demazure, m) {
    m.doc() = "Demazure atoms and key polynomials: exact integer computations";

    m.def("atom", [](const std::vector<int>& alpha) {
        return poly_to_dict(atom_polynomial(WeakComposition(alpha)));
    }, py::arg("alpha"), "Demazure atom A_alpha as {exponents: coefficient}");

    m.def("key", [](const std::vector<int>& gamma) {
        return poly_to_dict(key_polynomial(WeakComposition(gamma)));
    }, py::arg("gamma"), "key polynomial kappa_gamma");

    m.def("atom_by_fillings", [](const std::vector<int>& alpha, int budget) {
        return poly_to_dict(atom_by_fillings(WeakComposition(alpha), budget));
    }, py::arg("alpha"), py::arg("budget") = kDefaultCellBudget);

    m.def("key_by_fillings", [](const std::vector<int>& gamma, int budget) {
        return poly_to_dict(key_by_fillings(WeakComposition(gamma), budget));
    }, py::arg("gamma"), py::arg("budget") = kDefaultCellBudget);

    m.def("schur", [](const std::vector<int>& lambda, int nvars) {
        return poly_to_dict(schur(Partition(lambda), nvars));
    }, py::arg("lambda_"), py::arg("nvars"));

    m.def("evaluate", [](const std::string& expr) {
        return poly_to_dict(eval_expression(expr));
    }, py::arg("expr"), "evaluate the CLI expression language");

    m.def("to_str", [](const py::dict& f) { return dict_to_poly(f).to_string(); },
          py::arg("poly"));

    m.def("multiply", [](const py::dict& f, const py::dict& g) {
        return poly_to_dict(dict_to_poly(f) * dict_to_poly(g));
    }, py::arg("f"), py::arg("g"));

    m.def("apply_op", [](const std::string& kind, const std::vector<int>& word,
                         const py::dict& f) {
        return poly_to_dict(apply_word_letters(kind_of(kind), word, dict_to_poly(f)));
    }, py::arg("kind"), py::arg("word"), py::arg("poly"),
       "apply an operator word (rightmost letter first)");

    m.def("expand_atoms", [](const py::dict& f, int nvars) {
        return expansion_to_dict(expand_atoms(dict_to_poly(f), nvars).coeffs);
    }, py::arg("poly"), py::arg("nvars") = 0);

    m.def("expand_keys", [](const py::dict& f, int nvars) {
        return expansion_to_dict(expand_keys(dict_to_poly(f), nvars).coeffs);
    }, py::arg("poly"), py::arg("nvars") = 0);

    m.def("is_atom_positive", [](const py::dict& f, int nvars) {
        return is_atom_positive(dict_to_poly(f), nvars);
    }, py::arg("poly"), py::arg("nvars") = 0);

    m.def("is_key_positive", [](const py::dict& f, int nvars) {
        return is_key_positive(dict_to_poly(f), nvars);
    }, py::arg("poly"), py::arg("nvars") = 0);

    m.def("ssaf_count", [](const std::vector<int>& basement, const std::vector<int>& shape,
                           int budget) {
        return enumerate_ssaf(Permutation(basement), WeakComposition(shape), budget).size();
    }, py::arg("basement"), py::arg("shape"), py::arg("budget") = kDefaultCellBudget);

    m.def("column_to_row", [](const std::string& word) {
        return column_to_row(SegmentedWord::parse(word)).to_string();
    }, py::arg("column_word"));

    m.def("insert_word_shape", [](const std::vector<int>& word, int k) {
        return insert_word(Ssaf::empty(Permutation::identity(k)), word).shape().parts;
    }, py::arg("word"), py::arg("k"));

    m.def("conjecture_sweep", [](int max_part, int jobs) {
        const SweepReport report = sweep_conjecture(max_part, jobs);
        py::dict summary;
        summary["total_cases"] = report.records.size();
        py::list bad;
        for (const SweepRecord& rec : report.records) {
            if (rec.ok) continue;
            py::dict item;
            for (const auto& [name, value] : rec.params) item[py::str(name)] = value;
            item["min_coeff"] = rec.min_coeff;
            bad.append(std::move(item));
        }
        summary["counterexamples"] = std::move(bad);
        return summary;
    }, py::arg("max_part"), py::arg("jobs") = 1);

    m.def("polytope_csv", [](const std::string& expr) {
        return render_csv(cloud_of(eval_expression(expr)));
    }, py::arg("expr"));
}
