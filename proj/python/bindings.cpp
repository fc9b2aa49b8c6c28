#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "descent/bases.hpp"
#include "descent/characters.hpp"
#include "descent/descent_a.hpp"
#include "descent/descent_b.hpp"
#include "descent/domino.hpp"
#include "descent/io.hpp"
#include "descent/tableaux.hpp"
#include "descent/verify.hpp"

namespace py = pybind11;
using namespace descent;

namespace {

py::tuple as_tuple(const std::vector<int>& v) {
    py::tuple t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    return t;
}

py::int_ as_int(const Integer& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::dict table_dict(const ConstantTable& t) {
    py::dict out;
    for (const auto& i : t.subsets())
        for (const auto& j : t.subsets())
            for (const auto& k : t.subsets())
                if (const auto v = t(i, j, k))
                    out[py::make_tuple(as_tuple(i.elements()), as_tuple(j.elements()), as_tuple(k.elements()))] = v;
    return out;
}

py::dict d_dict(const DTable& d) {
    py::dict out;
    for (const auto& [shape, row] : d) {
        py::dict r;
        for (const auto& [subset, v] : row) r[as_tuple(subset.elements())] = v;
        out[as_tuple(shape.parts())] = r;
    }
    return out;
}

// {exponent vector: coefficient}, exponents indexed by the alphabet's variables.
py::dict poly_dict(const SparsePolynomial& p) {
    py::dict out;
    const auto size = p.alphabet()->size();
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps(size, 0);
        for (const auto& [var, e] : m.entries()) exps[var] = static_cast<int>(e);
        out[as_tuple(exps)] = as_int(c);
    }
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict out;
    out["identity"] = r.identity;
    out["n"] = r.n;
    out["alphabet_size"] = r.alphabet_size;
    out["status"] = status_name(r.status);
    out["checked"] = r.checked;
    if (r.counterexample)
        out["counterexample"] = py::dict(py::arg("key") = r.counterexample->key, py::arg("lhs") = r.counterexample->lhs,
                                         py::arg("rhs") = r.counterexample->rhs);
    else
        out["counterexample"] = py::none();
    out["error"] = r.error;
    out["wall_time_ms"] = r.wall_time_ms;
    return out;
}

py::dict domino_dict(const DominoTableau& t) {
    py::dict out;
    out["shape"] = as_tuple(t.shape().parts());
    out["labels"] = t.label_grid();
    out["pairing"] = t.pairing_grid();
    if (t.mode() == DominoMode::Standard) out["descent_set"] = as_tuple(t.descent_set().elements());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Descent algebra structure constants for S_n and B_n";

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);

    m.def("set_of_comp", [](const std::vector<int>& parts) { return as_tuple(set_of_comp(Composition(parts)).elements()); });
    m.def("comp_of_set", [](int n, const std::vector<int>& elements) {
        return as_tuple(comp_of_set(IndexSubset(n, elements)).parts());
    });
    m.def("partitions", [](int n) {
        std::vector<py::tuple> out;
        for (const auto& p : enumerate_partitions(n)) out.push_back(as_tuple(p.parts()));
        return out;
    });
    m.def("domino_shapes", [](int n) {
        std::vector<py::tuple> out;
        for (const auto& p : enumerate_P0(n)) out.push_back(as_tuple(p.parts()));
        return out;
    }, "Partitions of 2n with empty 2-core");
    m.def("two_quotient", [](const std::vector<int>& parts) {
        const auto q = two_quotient(Partition(parts));
        return py::make_tuple(as_tuple(q.minus.parts()), as_tuple(q.plus.parts()));
    });

    m.def("descent_set", [](const std::vector<int>& window) {
        return as_tuple(SignedPermutation(window).descent_set().elements());
    });
    m.def("b_descent_set", [](const std::vector<int>& window) {
        return as_tuple(b_descent_set(SignedPermutation(window)).elements());
    });

    m.def("a_constants", [](int n) { return table_dict(a_constants(n)); }, "{(I, J, K): a^K_IJ}, nonzero entries");
    m.def("b_constants", [](int n) { return table_dict(b_constants(n)); });
    m.def("c_constants", [](int n) { return table_dict(c_constants(n)); });
    m.def("triple_a", [](int n) { return table_dict(triple_a_table(n)); });
    m.def("triple_c", [](int n) { return table_dict(triple_c_table(n)); });
    m.def("matrix_count", [](const std::vector<int>& r, const std::vector<int>& c) {
        return m_matrix(Composition(r), Composition(c));
    });

    m.def("d_table", [](int n) { return d_dict(d_table(n)); });
    m.def("dB_table", [](int n) { return d_dict(dB_table(n)); });
    m.def("kostka", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return kostka(Partition(lambda), Composition(mu, true));
    });
    m.def("chi", [](const std::vector<int>& lambda, const std::vector<int>& rho) {
        return chi(Partition(lambda), Partition(rho));
    });
    m.def("psi", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return psi_B(Partition(lambda), Partition(mu));
    });
    m.def("kronecker_g", [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
        return kronecker_g(Partition(l), Partition(mu), Partition(nu));
    });
    m.def("kronecker_gB", [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
        return kronecker_gB(Partition(l), Partition(mu), Partition(nu));
    });

    m.def("schur", [](const std::vector<int>& lambda, int vars) {
        return poly_dict(eval_s(Partition(lambda), Alphabet::type_a(vars)));
    }, py::arg("shape"), py::arg("variables"));
    m.def("fundamental", [](const std::vector<int>& alpha, int vars) {
        return poly_dict(eval_F(Composition(alpha), Alphabet::type_a(vars)));
    }, py::arg("composition"), py::arg("variables"));
    m.def("domino_function", [](const std::vector<int>& lambda, int vars) {
        return poly_dict(eval_G(Partition(lambda), Alphabet::type_b(vars)));
    }, py::arg("shape"), py::arg("variables"), "Exponents are indexed x_0..x_N");

    m.def("standard_domino_tableaux", [](const std::vector<int>& shape) {
        std::vector<py::dict> out;
        for (const auto& t : enumerate_SDT(Partition(shape))) out.push_back(domino_dict(t));
        return out;
    });

    m.def("identities", [] {
        std::vector<py::dict> out;
        for (const auto& i : identity_registry())
            out.push_back(py::dict(py::arg("id") = i.id, py::arg("description") = i.description,
                                   py::arg("min_n") = i.min_n, py::arg("default_n") = i.default_n,
                                   py::arg("max_n") = i.max_n));
        return out;
    });
    m.def("verify", [](const std::string& id, int n) {
        VerificationReport r;
        {
            py::gil_scoped_release release;
            r = verify_identity(id, n);
        }
        return report_dict(r);
    }, py::arg("identity"), py::arg("n"));
    m.def("compute_table", [](const std::string& kind, int n, const std::string& format) {
        return io::compute_table(kind, n, io::parse_format(format));
    }, py::arg("kind"), py::arg("n"), py::arg("format") = "json");
}
