// Python bindings for the core operations: fixtures, protocol simulators,
// span closures, decomposition operators, attacks and the JSON formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lindecomp/attacks.hpp"
#include "lindecomp/bench.hpp"
#include "lindecomp/json_io.hpp"

namespace py = pybind11;
using namespace lindecomp;

namespace {

MatrixF matrix_from_lists(Fe modulus, const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty())
        throw std::invalid_argument("matrix needs at least one row");
    MatrixF m(modulus, rows.size(), rows.front().size());
    PrimeField f(modulus);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<Fe>> matrix_to_lists(const MatrixF& m) {
    std::vector<std::vector<Fe>> rows(m.rows(), std::vector<Fe>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j);
    return rows;
}

py::object payload_to_py(const Payload& p) {
    if (std::holds_alternative<MatrixF>(p))
        return py::cast(std::get<MatrixF>(p));
    return py::cast(std::get<VectorF>(p));
}

Side side_from_str(const std::string& s) {
    if (s == "A" || s == "a")
        return Side::a;
    if (s == "B" || s == "b")
        return Side::b;
    throw std::invalid_argument("side must be 'A' or 'B'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sandwich-protocol simulators and the linear decomposition attack";

    py::register_exception<NotInSpanError>(m, "NotInSpanError");
    py::register_exception<AttackError>(m, "AttackError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<MatrixF>(m, "Matrix")
        .def(py::init(&matrix_from_lists), py::arg("modulus"), py::arg("rows"))
        .def_static("identity", &MatrixF::identity, py::arg("modulus"), py::arg("n"))
        .def_property_readonly("rows", &MatrixF::rows)
        .def_property_readonly("cols", &MatrixF::cols)
        .def_property_readonly("modulus", &MatrixF::modulus)
        .def("tolist", &matrix_to_lists)
        .def("inverse", &MatrixF::inverse)
        .def("__matmul__", [](const MatrixF& a, const MatrixF& b) { return a * b; })
        .def("__mul__", [](const MatrixF& a, const MatrixF& b) { return a * b; })
        .def("__add__", [](const MatrixF& a, const MatrixF& b) { return a + b; })
        .def("__sub__", [](const MatrixF& a, const MatrixF& b) { return a - b; })
        .def("__eq__", [](const MatrixF& a, const MatrixF& b) { return a == b; })
        .def("__repr__", [](const MatrixF& a) { return "Matrix" + a.to_string(); });

    py::class_<VectorF>(m, "Vector")
        .def(py::init(&VectorF::from_ints), py::arg("modulus"), py::arg("values"))
        .def_property_readonly("modulus", &VectorF::modulus)
        .def("__len__", &VectorF::size)
        .def("tolist", [](const VectorF& v) { return v.flat(); })
        .def("__mul__", [](const VectorF& v, const MatrixF& m_) { return v * m_; })
        .def("__add__", [](const VectorF& a, const VectorF& b) { return a + b; })
        .def("__sub__", [](const VectorF& a, const VectorF& b) { return a - b; })
        .def("__eq__", [](const VectorF& a, const VectorF& b) { return a == b; })
        .def("__repr__", [](const VectorF& v) { return "Vector" + v.to_string(); });

    py::class_<ProtocolFixture>(m, "Fixture")
        .def_readonly("modulus", &ProtocolFixture::modulus)
        .def_readonly("dimension", &ProtocolFixture::dimension)
        .def_readonly("seed", &ProtocolFixture::seed)
        .def_property_readonly("a_gens",
                               [](const ProtocolFixture& fx) { return fx.a_side.gens; })
        .def_property_readonly("b_gens",
                               [](const ProtocolFixture& fx) { return fx.b_side.gens; })
        .def_property_readonly("h",
                               [](const ProtocolFixture& fx) {
                                   return fx.h ? py::cast(*fx.h) : py::none().cast<py::object>();
                               })
        .def_property_readonly("y",
                               [](const ProtocolFixture& fx) {
                                   return fx.y ? py::cast(*fx.y) : py::none().cast<py::object>();
                               })
        .def("to_json", [](const ProtocolFixture& fx) { return fixture_to_json(fx).dump(2); })
        .def_static("from_json",
                    [](const std::string& text) { return fixture_from_json(parse_json(text)); });

    m.def("make_block_fixture", &make_block_fixture, py::arg("n1"), py::arg("n2"),
          py::arg("k_a"), py::arg("k_b"), py::arg("p"), py::arg("seed"));
    m.def("make_polynomial_fixture", &make_polynomial_fixture, py::arg("n"), py::arg("p"),
          py::arg("seed"), py::arg("k") = 2);

    py::class_<Transcript>(m, "Transcript")
        .def_property_readonly("protocol",
                               [](const Transcript& t) { return protocol_name(t.protocol); })
        .def("labels",
             [](const Transcript& t) {
                 std::vector<std::string> out;
                 for (const auto& msg : t.messages)
                     out.push_back(msg.label);
                 return out;
             })
        .def("matrix", [](const Transcript& t, const std::string& l) { return t.matrix(l); })
        .def("vector", [](const Transcript& t, const std::string& l) { return t.vector(l); })
        .def("to_json", [](const Transcript& t) { return transcript_to_json(t).dump(2); })
        .def_static("from_json", [](const std::string& text) {
            return transcript_from_json(parse_json(text));
        })
        .def("__eq__", [](const Transcript& a, const Transcript& b) { return a == b; });

    py::class_<HonestResult>(m, "RunResult")
        .def_readonly("transcript", &HonestResult::transcript)
        .def_property_readonly(
            "key_alice", [](const HonestResult& r) { return payload_to_py(r.key_alice); })
        .def_property_readonly(
            "key_bob", [](const HonestResult& r) { return payload_to_py(r.key_bob); });

    m.def(
        "run_wang",
        [](const ProtocolFixture& fx, std::uint64_t seed, std::size_t lo, std::size_t hi) {
            Rng rng(seed);
            return run_wang(fx, rng, {lo, hi});
        },
        py::arg("fixture"), py::arg("seed"), py::arg("word_lo") = 3, py::arg("word_hi") = 8);
    m.def(
        "run_kolee",
        [](const ProtocolFixture& fx, std::uint64_t seed, std::size_t lo, std::size_t hi) {
            Rng rng(seed);
            return run_kolee(fx, rng, {lo, hi});
        },
        py::arg("fixture"), py::arg("seed"), py::arg("word_lo") = 3, py::arg("word_hi") = 8);
    m.def(
        "run_harley",
        [](const ProtocolFixture& fx, const VectorF& message, std::uint64_t seed,
           std::size_t lo, std::size_t hi) {
            Rng rng(seed);
            return run_harley(fx, message, rng, {lo, hi});
        },
        py::arg("fixture"), py::arg("message"), py::arg("seed"), py::arg("word_lo") = 3,
        py::arg("word_hi") = 8);
    m.def(
        "run_generic",
        [](const ProtocolFixture& fx, const std::string& schedule_json, std::uint64_t seed,
           std::size_t lo, std::size_t hi) {
            Rng rng(seed);
            return run_generic(fx, schedule_from_json(parse_json(schedule_json)), rng, {lo, hi});
        },
        py::arg("fixture"), py::arg("schedule_json"), py::arg("seed"), py::arg("word_lo") = 3,
        py::arg("word_hi") = 8);

    m.def("attack_wang", &attack_wang, py::arg("transcript"));
    m.def("attack_kolee", &attack_kolee, py::arg("transcript"));
    m.def("attack_harley", &attack_harley, py::arg("transcript"));
    m.def(
        "execute_plan",
        [](const Transcript& t, const std::string& plan_json) {
            return execute_plan(t, plan_from_json(parse_json(plan_json)));
        },
        py::arg("transcript"), py::arg("plan_json"));

    py::class_<SandwichBasis>(m, "SandwichBasis")
        .def_property_readonly("dimension", &SandwichBasis::dimension)
        .def_property_readonly(
            "productive_lists",
            [](const SandwichBasis& b) { return b.stats().productive_lists; })
        .def_property_readonly(
            "candidates_examined",
            [](const SandwichBasis& b) { return b.stats().candidates_examined; })
        .def("contains", &SandwichBasis::contains)
        .def("coordinates", &SandwichBasis::coordinates)
        .def("to_json", [](const SandwichBasis& b) { return basis_to_json(b).dump(2); });

    py::class_<OrbitBasis>(m, "OrbitBasis")
        .def_property_readonly("dimension", &OrbitBasis::dimension)
        .def("contains", &OrbitBasis::contains)
        .def("coordinates", &OrbitBasis::coordinates);

    m.def(
        "span_closure",
        [](const ProtocolFixture& fx, const std::string& side, const MatrixF& center) {
            return span_closure(fx.side(side_from_str(side)), center);
        },
        py::arg("fixture"), py::arg("side"), py::arg("center"));
    m.def(
        "orbit_closure",
        [](const ProtocolFixture& fx, const std::string& side, const VectorF& center) {
            return orbit_closure(fx.side(side_from_str(side)), center);
        },
        py::arg("fixture"), py::arg("side"), py::arg("center"));

    py::class_<SandwichOperator>(m, "SandwichOperator")
        .def("apply", &SandwichOperator::apply)
        .def_property_readonly("term_count",
                               [](const SandwichOperator& op) { return op.terms().size(); });
    py::class_<RightOperator>(m, "RightOperator")
        .def("apply", &RightOperator::apply)
        .def_property_readonly("term_count",
                               [](const RightOperator& op) { return op.terms().size(); });

    m.def("derive_operator", &derive_operator, py::arg("basis"), py::arg("image"));
    m.def("derive_right_operator", &derive_right_operator, py::arg("basis"), py::arg("image"));
}
