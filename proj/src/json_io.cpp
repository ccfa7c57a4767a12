#include "lindecomp/json_io.hpp"

#include <fstream>

namespace lindecomp {

namespace {

Json matrix_to_flat(const MatrixF& m) {
    Json arr = Json::array();
    for (Fe v : m.flat())
        arr.push_back(v);
    return arr;
}

Json vector_to_flat(const VectorF& v) {
    Json arr = Json::array();
    for (Fe x : v.flat())
        arr.push_back(x);
    return arr;
}

std::vector<std::int64_t> flat_from_json(const Json& arr, const char* what) {
    if (!arr.is_array())
        throw ParseError(std::string(what) + " must be an integer array");
    std::vector<std::int64_t> out;
    out.reserve(arr.size());
    for (const Json& v : arr) {
        if (!v.is_number_integer())
            throw ParseError(std::string(what) + " must hold exact integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

MatrixF square_from_json(const Json& arr, Fe p, std::size_t n, const char* what) {
    auto flat = flat_from_json(arr, what);
    if (flat.size() != n * n)
        throw ParseError(std::string(what) + " has wrong entry count");
    return MatrixF::from_flat(p, n, n, flat);
}

const Json& require(const Json& j, const char* field) {
    if (!j.contains(field))
        throw ParseError(std::string("missing field '") + field + "'");
    return j.at(field);
}

// Turns nlohmann type errors (wrong JSON shape) into ParseError.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

Side side_from_string(const std::string& s) {
    if (s == "A" || s == "a")
        return Side::a;
    if (s == "B" || s == "b")
        return Side::b;
    throw ParseError("owner side must be 'A' or 'B', got '" + s + "'");
}

} // namespace

Json fixture_to_json(const ProtocolFixture& fx) {
    Json j;
    j["modulus"] = fx.modulus;
    j["dimension"] = fx.dimension;
    j["a_gens"] = Json::array();
    for (const MatrixF& g : fx.a_side.gens)
        j["a_gens"].push_back(matrix_to_flat(g));
    j["b_gens"] = Json::array();
    for (const MatrixF& g : fx.b_side.gens)
        j["b_gens"].push_back(matrix_to_flat(g));
    if (fx.h)
        j["h"] = matrix_to_flat(*fx.h);
    if (fx.y)
        j["y"] = vector_to_flat(*fx.y);
    j["seed"] = fx.seed;
    return j;
}

ProtocolFixture fixture_from_json(const Json& j) {
    return guarded("fixture", [&] {
        const Fe p = require(j, "modulus").get<Fe>();
        const std::size_t n = require(j, "dimension").get<std::size_t>();
        std::vector<MatrixF> a_gens, b_gens;
        for (const Json& g : require(j, "a_gens"))
            a_gens.push_back(square_from_json(g, p, n, "a generator"));
        for (const Json& g : require(j, "b_gens"))
            b_gens.push_back(square_from_json(g, p, n, "b generator"));
        std::optional<MatrixF> h;
        if (j.contains("h"))
            h = square_from_json(j.at("h"), p, n, "h");
        std::optional<VectorF> y;
        if (j.contains("y")) {
            auto flat = flat_from_json(j.at("y"), "y");
            if (flat.size() != n)
                throw ParseError("y has wrong length");
            y = VectorF::from_ints(p, flat);
        }
        const std::uint64_t seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
        return fixture_from_parts(p, std::move(a_gens), std::move(b_gens), std::move(h),
                                  std::move(y), seed);
    });
}

namespace {

Json public_fixture_to_json(const PublicFixtureData& pub) {
    Json j;
    j["modulus"] = pub.modulus;
    j["dimension"] = pub.dimension;
    j["a_gens"] = Json::array();
    for (const MatrixF& g : pub.a_gens)
        j["a_gens"].push_back(matrix_to_flat(g));
    j["b_gens"] = Json::array();
    for (const MatrixF& g : pub.b_gens)
        j["b_gens"].push_back(matrix_to_flat(g));
    if (pub.h)
        j["h"] = matrix_to_flat(*pub.h);
    if (pub.y)
        j["y"] = vector_to_flat(*pub.y);
    return j;
}

PublicFixtureData public_fixture_from_json(const Json& j) {
    PublicFixtureData pub;
    pub.modulus = require(j, "modulus").get<Fe>();
    pub.dimension = require(j, "dimension").get<std::size_t>();
    for (const Json& g : require(j, "a_gens"))
        pub.a_gens.push_back(square_from_json(g, pub.modulus, pub.dimension, "a generator"));
    for (const Json& g : require(j, "b_gens"))
        pub.b_gens.push_back(square_from_json(g, pub.modulus, pub.dimension, "b generator"));
    if (j.contains("h"))
        pub.h = square_from_json(j.at("h"), pub.modulus, pub.dimension, "h");
    if (j.contains("y")) {
        auto flat = flat_from_json(j.at("y"), "y");
        if (flat.size() != pub.dimension)
            throw ParseError("y has wrong length");
        pub.y = VectorF::from_ints(pub.modulus, flat);
    }
    return pub;
}

} // namespace

Json transcript_to_json(const Transcript& t) {
    Json j;
    j["protocol_id"] = protocol_name(t.protocol);
    j["fixture_public"] = public_fixture_to_json(t.fixture);
    j["messages"] = Json::array();
    for (const Transcript::Message& m : t.messages) {
        Json msg;
        msg["label"] = m.label;
        if (std::holds_alternative<MatrixF>(m.payload)) {
            msg["kind"] = "matrix";
            msg["data"] = matrix_to_flat(std::get<MatrixF>(m.payload));
        } else {
            msg["kind"] = "vector";
            msg["data"] = vector_to_flat(std::get<VectorF>(m.payload));
        }
        j["messages"].push_back(msg);
    }
    return j;
}

Transcript transcript_from_json(const Json& j) {
    return guarded("transcript", [&] {
        Transcript t;
        t.protocol = protocol_from_name(require(j, "protocol_id").get<std::string>());
        t.fixture = public_fixture_from_json(require(j, "fixture_public"));
        for (const Json& msg : require(j, "messages")) {
            const std::string label = require(msg, "label").get<std::string>();
            const std::string kind = require(msg, "kind").get<std::string>();
            if (kind == "matrix") {
                t.messages.push_back(
                    {label, square_from_json(require(msg, "data"), t.fixture.modulus,
                                             t.fixture.dimension, "message")});
            } else if (kind == "vector") {
                auto flat = flat_from_json(require(msg, "data"), "message");
                if (flat.size() != t.fixture.dimension)
                    throw ParseError("vector message has wrong length");
                t.messages.push_back({label, VectorF::from_ints(t.fixture.modulus, flat)});
            } else {
                throw ParseError("message kind must be 'matrix' or 'vector'");
            }
        }
        return t;
    });
}

Json key_to_json(ProtocolId protocol, const Payload& key) {
    Json j;
    j["protocol_id"] = protocol_name(protocol);
    if (std::holds_alternative<MatrixF>(key)) {
        const MatrixF& m = std::get<MatrixF>(key);
        j["kind"] = "matrix";
        j["modulus"] = m.modulus();
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        j["data"] = matrix_to_flat(m);
    } else {
        const VectorF& v = std::get<VectorF>(key);
        j["kind"] = "vector";
        j["modulus"] = v.modulus();
        j["length"] = v.size();
        j["data"] = vector_to_flat(v);
    }
    return j;
}

Payload key_from_json(const Json& j) {
    return guarded("key", [&]() -> Payload {
        const std::string kind = require(j, "kind").get<std::string>();
        const Fe p = require(j, "modulus").get<Fe>();
        if (kind == "matrix") {
            const std::size_t rows = require(j, "rows").get<std::size_t>();
            const std::size_t cols = require(j, "cols").get<std::size_t>();
            auto flat = flat_from_json(require(j, "data"), "key");
            if (flat.size() != rows * cols)
                throw ParseError("key entry count does not match rows*cols");
            return MatrixF::from_flat(p, rows, cols, flat);
        }
        if (kind == "vector") {
            const std::size_t length = require(j, "length").get<std::size_t>();
            auto flat = flat_from_json(require(j, "data"), "key");
            if (flat.size() != length)
                throw ParseError("key length mismatch");
            return VectorF::from_ints(p, flat);
        }
        throw ParseError("key kind must be 'matrix' or 'vector'");
    });
}

ProtocolId key_protocol_from_json(const Json& j) {
    return guarded("key", [&] {
        return protocol_from_name(require(j, "protocol_id").get<std::string>());
    });
}

AttackPlan plan_from_json(const Json& j) {
    return guarded("plan", [&] {
        AttackPlan plan;
        for (const Json& s : require(j, "steps")) {
            AttackStep step;
            step.center = require(s, "center").get<std::string>();
            step.image = require(s, "image").get<std::string>();
            step.owner = side_from_string(require(s, "owner").get<std::string>());
            step.target = require(s, "target").get<std::string>();
            step.name = require(s, "name").get<std::string>();
            plan.steps.push_back(std::move(step));
        }
        plan.output = require(j, "output").get<std::string>();
        return plan;
    });
}

Json plan_to_json(const AttackPlan& plan) {
    Json j;
    j["steps"] = Json::array();
    for (const AttackStep& s : plan.steps) {
        Json step;
        step["center"] = s.center;
        step["image"] = s.image;
        step["owner"] = side_name(s.owner);
        step["target"] = s.target;
        step["name"] = s.name;
        j["steps"].push_back(step);
    }
    j["output"] = plan.output;
    return j;
}

Schedule schedule_from_json(const Json& j) {
    return guarded("schedule", [&] {
        Schedule schedule;
        for (const Json& r : require(j, "rounds")) {
            ScheduleRound round;
            round.side = side_from_string(require(r, "side").get<std::string>());
            round.source = require(r, "source").get<std::string>();
            round.exponent = require(r, "exponent").get<int>();
            if (r.contains("style")) {
                const std::string style = r.at("style").get<std::string>();
                if (style == "conjugation")
                    round.style = PairStyle::conjugation;
                else if (style == "two_sided")
                    round.style = PairStyle::two_sided;
                else
                    throw ParseError("round style must be 'two_sided' or 'conjugation'");
            }
            round.result = require(r, "result").get<std::string>();
            schedule.rounds.push_back(std::move(round));
        }
        for (const Json& idx : require(j, "key_chain"))
            schedule.key_chain.push_back(idx.get<std::size_t>());
        return schedule;
    });
}

Json schedule_to_json(const Schedule& schedule) {
    Json j;
    j["rounds"] = Json::array();
    for (const ScheduleRound& r : schedule.rounds) {
        Json round;
        round["side"] = side_name(r.side);
        round["source"] = r.source;
        round["exponent"] = r.exponent;
        round["style"] = r.style == PairStyle::conjugation ? "conjugation" : "two_sided";
        round["result"] = r.result;
        j["rounds"].push_back(round);
    }
    j["key_chain"] = schedule.key_chain;
    return j;
}

Json basis_to_json(const SandwichBasis& basis) {
    Json j;
    j["entries"] = Json::array();
    for (const SandwichBasis::Entry& e : basis.entries()) {
        Json entry;
        entry["left"] = matrix_to_flat(e.left);
        entry["right"] = matrix_to_flat(e.right);
        entry["value"] = matrix_to_flat(e.value);
        j["entries"].push_back(entry);
    }
    j["productive_lists"] = basis.stats().productive_lists;
    j["lists_processed"] = basis.stats().lists_processed;
    j["candidates_examined"] = basis.stats().candidates_examined;
    j["per_list_candidates"] = basis.stats().per_list_candidates;
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json(text);
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

} // namespace lindecomp
