#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lindecomp/platform.hpp"

namespace lindecomp {

enum class ProtocolId { wang, kolee, harley, generic };

const char* protocol_name(ProtocolId id);
ProtocolId protocol_from_name(std::string_view name);

using Payload = std::variant<MatrixF, VectorF>;

// Everything an eavesdropper sees about the platform: moduli, generators and
// the public base element. Deliberately excludes seeds and private words.
struct PublicFixtureData {
    Fe modulus = 0;
    std::size_t dimension = 0;
    std::vector<MatrixF> a_gens;
    std::vector<MatrixF> b_gens;
    std::optional<MatrixF> h;
    std::optional<VectorF> y;

    GeneratorSet side(Side s) const;

    bool operator==(const PublicFixtureData& rhs) const noexcept = default;
};

PublicFixtureData public_view(const ProtocolFixture& fx);

// Ordered, labeled public messages of one protocol run. This is the entire
// attack input; no private element ever lands here.
struct Transcript {
    ProtocolId protocol = ProtocolId::generic;
    PublicFixtureData fixture;
    struct Message {
        std::string label;
        Payload payload;
        bool operator==(const Message& rhs) const noexcept = default;
    };
    std::vector<Message> messages;

    const Payload* find(std::string_view label) const;
    const MatrixF& matrix(std::string_view label) const;
    const VectorF& vector(std::string_view label) const;

    bool operator==(const Transcript& rhs) const noexcept = default;
};

// Output of an honest run: the transcript plus both parties' keys and, for
// test oracles only, the private elements. The private log never reaches
// transcript serialization; attack entry points accept Transcript alone.
struct HonestResult {
    Transcript transcript;
    Payload key_alice;
    Payload key_bob;
    std::map<std::string, Payload> private_log;
};

// --- four-pass two-sided protocol (messages x, y, w, z, u, v) ---

struct WangSecrets {
    MatrixF c1, c2, d1, d2, d3, d4; // Alice, from A
    MatrixF f1, f2, g1, g2, g3, g4; // Bob, from B
};

HonestResult run_wang(const ProtocolFixture& fx, const WangSecrets& s);
HonestResult run_wang(const ProtocolFixture& fx, Rng& rng,
                      WordLengthRange words = WordLengthRange{});

// --- conjugation key exchange (messages ha, hb) ---

struct KoLeeSecrets {
    MatrixF a; // Alice, from A
    MatrixF b; // Bob, from B
};

HonestResult run_kolee(const ProtocolFixture& fx, const KoLeeSecrets& s);
HonestResult run_kolee(const ProtocolFixture& fx, Rng& rng,
                       WordLengthRange words = WordLengthRange{});

// --- vector message transport over a commutative group ---

struct HarleySecrets {
    MatrixF b, a1, a, b1, b2; // all from the shared commutative group
};

HonestResult run_harley(const ProtocolFixture& fx, const VectorF& message,
                        const HarleySecrets& s);
HonestResult run_harley(const ProtocolFixture& fx, const VectorF& message, Rng& rng,
                        WordLengthRange words = WordLengthRange{});

// --- generic scheme: a scripted sequence of two-sided publications ---

enum class PairStyle { two_sided, conjugation };

struct ScheduleRound {
    Side side = Side::a;
    std::string source;          // label of an already-public element
    int exponent = 1;            // +1 publishes phi(src), -1 publishes phi^-1(src)
    PairStyle style = PairStyle::two_sided;
    std::string result;          // label of the published element
};

// rounds publish elements in order; key_chain lists round indices whose maps,
// applied innermost-first to h, form the exchanged key. Each chained map is
// exhibited in public data by its round's (source, result) pair.
struct Schedule {
    std::vector<ScheduleRound> rounds;
    std::vector<std::size_t> key_chain;
};

void validate_schedule(const Schedule& schedule);

HonestResult run_generic(const ProtocolFixture& fx, const Schedule& schedule,
                         const std::vector<SandwichMap>& round_maps);
HonestResult run_generic(const ProtocolFixture& fx, const Schedule& schedule, Rng& rng,
                         WordLengthRange words = WordLengthRange{});

} // namespace lindecomp
