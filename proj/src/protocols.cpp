#include "lindecomp/protocols.hpp"

#include <set>

namespace lindecomp {

const char* protocol_name(ProtocolId id) {
    switch (id) {
    case ProtocolId::wang: return "wang";
    case ProtocolId::kolee: return "kolee";
    case ProtocolId::harley: return "harley";
    case ProtocolId::generic: return "generic";
    }
    return "generic";
}

ProtocolId protocol_from_name(std::string_view name) {
    if (name == "wang") return ProtocolId::wang;
    if (name == "kolee") return ProtocolId::kolee;
    if (name == "harley") return ProtocolId::harley;
    if (name == "generic") return ProtocolId::generic;
    throw ParseError("unknown protocol id: " + std::string(name));
}

GeneratorSet PublicFixtureData::side(Side s) const {
    return GeneratorSet::from_generators(s, s == Side::a ? a_gens : b_gens);
}

PublicFixtureData public_view(const ProtocolFixture& fx) {
    PublicFixtureData pub;
    pub.modulus = fx.modulus;
    pub.dimension = fx.dimension;
    pub.a_gens = fx.a_side.gens;
    pub.b_gens = fx.b_side.gens;
    pub.h = fx.h;
    pub.y = fx.y;
    return pub;
}

const Payload* Transcript::find(std::string_view label) const {
    for (const Message& m : messages)
        if (m.label == label)
            return &m.payload;
    return nullptr;
}

const MatrixF& Transcript::matrix(std::string_view label) const {
    const Payload* p = find(label);
    if (!p)
        throw PlanError("transcript has no message labeled '" + std::string(label) + "'");
    if (!std::holds_alternative<MatrixF>(*p))
        throw PlanError("message '" + std::string(label) + "' is not a matrix");
    return std::get<MatrixF>(*p);
}

const VectorF& Transcript::vector(std::string_view label) const {
    const Payload* p = find(label);
    if (!p)
        throw PlanError("transcript has no message labeled '" + std::string(label) + "'");
    if (!std::holds_alternative<VectorF>(*p))
        throw PlanError("message '" + std::string(label) + "' is not a vector");
    return std::get<VectorF>(*p);
}

namespace {

const MatrixF& require_h(const ProtocolFixture& fx) {
    if (!fx.h)
        throw FixtureError("fixture carries no base element h");
    return *fx.h;
}

} // namespace

HonestResult run_wang(const ProtocolFixture& fx, const WangSecrets& s) {
    fx.verify_commutation();
    const MatrixF& h = require_h(fx);

    // Alice publishes x; Bob answers with y and w; Alice with z and u; Bob
    // closes with v. Both peel their outer masks to reach the shared key.
    const MatrixF x = s.d1 * s.c1 * h * s.c2 * s.d2;
    const MatrixF y = s.g1 * s.f1 * h * s.f2 * s.g2;
    const MatrixF w = s.g3 * s.f1 * x * s.f2 * s.g4;
    const MatrixF z = s.d3 * s.c1 * y * s.c2 * s.d4;
    const MatrixF u = s.d1.inverse() * w * s.d2.inverse();
    const MatrixF v = s.g1.inverse() * z * s.g2.inverse();

    const MatrixF key_alice = s.d3.inverse() * v * s.d4.inverse();
    const MatrixF key_bob = s.g3.inverse() * u * s.g4.inverse();

    HonestResult out{
        Transcript{ProtocolId::wang, public_view(fx),
                   {{"h", h}, {"x", x}, {"y", y}, {"w", w}, {"z", z}, {"u", u}, {"v", v}}},
        key_alice,
        key_bob,
        {{"c1", s.c1}, {"c2", s.c2}, {"d1", s.d1}, {"d2", s.d2}, {"d3", s.d3}, {"d4", s.d4},
         {"f1", s.f1}, {"f2", s.f2}, {"g1", s.g1}, {"g2", s.g2}, {"g3", s.g3}, {"g4", s.g4}}};
    return out;
}

HonestResult run_wang(const ProtocolFixture& fx, Rng& rng, WordLengthRange words) {
    WangSecrets s;
    s.c1 = random_word(fx.a_side, words, rng);
    s.c2 = random_word(fx.a_side, words, rng);
    s.d1 = random_word(fx.a_side, words, rng);
    s.d2 = random_word(fx.a_side, words, rng);
    s.d3 = random_word(fx.a_side, words, rng);
    s.d4 = random_word(fx.a_side, words, rng);
    s.f1 = random_word(fx.b_side, words, rng);
    s.f2 = random_word(fx.b_side, words, rng);
    s.g1 = random_word(fx.b_side, words, rng);
    s.g2 = random_word(fx.b_side, words, rng);
    s.g3 = random_word(fx.b_side, words, rng);
    s.g4 = random_word(fx.b_side, words, rng);
    return run_wang(fx, s);
}

HonestResult run_kolee(const ProtocolFixture& fx, const KoLeeSecrets& s) {
    fx.verify_commutation();
    const MatrixF& h = require_h(fx);

    const MatrixF ha = s.a * h * s.a.inverse();
    const MatrixF hb = s.b * h * s.b.inverse();
    const MatrixF key_alice = s.a * hb * s.a.inverse();
    const MatrixF key_bob = s.b * ha * s.b.inverse();

    return HonestResult{
        Transcript{ProtocolId::kolee, public_view(fx), {{"h", h}, {"ha", ha}, {"hb", hb}}},
        key_alice,
        key_bob,
        {{"a", s.a}, {"b", s.b}}};
}

HonestResult run_kolee(const ProtocolFixture& fx, Rng& rng, WordLengthRange words) {
    KoLeeSecrets s;
    s.a = random_word(fx.a_side, words, rng);
    s.b = random_word(fx.b_side, words, rng);
    return run_kolee(fx, s);
}

HonestResult run_harley(const ProtocolFixture& fx, const VectorF& message,
                        const HarleySecrets& s) {
    fx.verify_commutation();
    if (!fx.y)
        throw FixtureError("fixture carries no public vector y");
    const VectorF& y = *fx.y;
    if (message.size() != fx.dimension)
        throw DimensionMismatch("message length does not match fixture dimension");

    const VectorF yb = y * s.b;
    const VectorF xa = message * s.a;
    const VectorF yba1 = yb * s.a1;
    const VectorF xab1 = xa * s.b1;
    const VectorF ya1b2 = y * s.a1 * s.b2;
    // Alice strips her factors before masking the message difference.
    const VectorF xb1 = xab1 * s.a.inverse();
    const VectorF yb2 = ya1b2 * s.a1.inverse();
    const VectorF diff = xb1 - yb2;
    // Bob unmasks with his own factors and recovers the message.
    const VectorF recovered = diff * s.b1.inverse() + y * s.b2 * s.b1.inverse();

    return HonestResult{
        Transcript{ProtocolId::harley, public_view(fx),
                   {{"yb", yb}, {"xa", xa}, {"yba1", yba1}, {"xab1", xab1}, {"ya1b2", ya1b2},
                    {"xb1-yb2", diff}}},
        message,
        recovered,
        {{"b", s.b}, {"a1", s.a1}, {"a", s.a}, {"b1", s.b1}, {"b2", s.b2}}};
}

HonestResult run_harley(const ProtocolFixture& fx, const VectorF& message, Rng& rng,
                        WordLengthRange words) {
    HarleySecrets s;
    s.b = random_word(fx.b_side, words, rng);
    s.a1 = random_word(fx.a_side, words, rng);
    s.a = random_word(fx.a_side, words, rng);
    s.b1 = random_word(fx.b_side, words, rng);
    s.b2 = random_word(fx.b_side, words, rng);
    return run_harley(fx, message, s);
}

void validate_schedule(const Schedule& schedule) {
    if (schedule.rounds.empty())
        throw ScheduleError("schedule has no rounds");
    std::set<std::string> labels{"h"};
    for (const ScheduleRound& r : schedule.rounds) {
        if (r.exponent != 1 && r.exponent != -1)
            throw ScheduleError("round exponent must be +1 or -1");
        if (r.result.empty() || r.result == "h")
            throw ScheduleError("round result label must be fresh and nonempty");
        if (!labels.count(r.source))
            throw ScheduleError("round source '" + r.source + "' is not a public element");
        if (!labels.insert(r.result).second)
            throw ScheduleError("duplicate result label '" + r.result + "'");
    }
    if (schedule.key_chain.empty())
        throw ScheduleError("schedule key chain is empty");
    for (std::size_t idx : schedule.key_chain)
        if (idx >= schedule.rounds.size())
            throw ScheduleError("key chain references round " + std::to_string(idx) +
                                " out of " + std::to_string(schedule.rounds.size()));
}

HonestResult run_generic(const ProtocolFixture& fx, const Schedule& schedule,
                         const std::vector<SandwichMap>& round_maps) {
    fx.verify_commutation();
    validate_schedule(schedule);
    const MatrixF& h = require_h(fx);
    if (round_maps.size() != schedule.rounds.size())
        throw ScheduleError("one sandwich map per round required");

    HonestResult out;
    out.transcript.protocol = ProtocolId::generic;
    out.transcript.fixture = public_view(fx);
    out.transcript.messages.push_back({"h", h});

    for (std::size_t i = 0; i < schedule.rounds.size(); ++i) {
        const ScheduleRound& r = schedule.rounds[i];
        const SandwichMap& map = round_maps[i];
        const MatrixF& src = out.transcript.matrix(r.source);
        const MatrixF published =
            r.exponent == 1 ? map.apply(src) : map.inverse().apply(src);
        out.transcript.messages.push_back({r.result, published});
        out.private_log["r" + std::to_string(i) + ".left"] = map.left;
        out.private_log["r" + std::to_string(i) + ".right"] = map.right;
    }

    // Key per the chain, innermost first. Alice applies her own maps outside
    // Bob's partial key; Bob does the opposite. The two bracketings agree
    // exactly when the sides commute elementwise.
    auto chain_apply = [&](Side who, MatrixF val) {
        for (std::size_t idx : schedule.key_chain) {
            const ScheduleRound& r = schedule.rounds[idx];
            if (r.side != who)
                continue;
            const SandwichMap& map = round_maps[idx];
            val = r.exponent == 1 ? map.apply(val) : map.inverse().apply(val);
        }
        return val;
    };
    out.key_alice = chain_apply(Side::a, chain_apply(Side::b, h));
    out.key_bob = chain_apply(Side::b, chain_apply(Side::a, h));
    return out;
}

HonestResult run_generic(const ProtocolFixture& fx, const Schedule& schedule, Rng& rng,
                         WordLengthRange words) {
    validate_schedule(schedule);
    std::vector<SandwichMap> maps;
    maps.reserve(schedule.rounds.size());
    for (const ScheduleRound& r : schedule.rounds) {
        const GeneratorSet& side = fx.side(r.side);
        if (r.style == PairStyle::conjugation) {
            MatrixF w = random_word(side, words, rng);
            MatrixF w_inv = w.inverse();
            maps.push_back({std::move(w), std::move(w_inv)});
        } else {
            MatrixF l = random_word(side, words, rng);
            MatrixF rr = random_word(side, words, rng);
            maps.push_back({std::move(l), std::move(rr)});
        }
    }
    return run_generic(fx, schedule, maps);
}

} // namespace lindecomp
