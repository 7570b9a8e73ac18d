#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace lzcdt {

/// Ordered sequence of discrete symbols over a small alphabet.
/// Every symbol value must be < alphabet_size.
struct SymbolSequence {
    std::vector<int> symbols;
    int alphabet_size = 2;

    SymbolSequence() = default;
    SymbolSequence(std::vector<int> syms, int alphabet);

    /// Convenience constructor from a digit string like "101110".
    static SymbolSequence from_digits(const std::string& digits, int alphabet = 2);

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

/// A phrase is a contiguous run of symbols, packed one symbol per byte.
using Phrase = std::string;

/// Set of distinct phrases produced by left-to-right LZ parsing.
/// Parse order is not part of equality; only set contents matter.
struct Grammar {
    std::unordered_set<Phrase> phrases;

    std::size_t size() const { return phrases.size(); }
    bool contains(const Phrase& p) const { return phrases.count(p) != 0; }

    bool operator==(const Grammar& other) const { return phrases == other.phrases; }
};

enum class Direction { XtoY, YtoX, Tie };

std::string to_string(Direction d);

struct PenaltyReport {
    int penalty_x_to_y = 0;
    int penalty_y_to_x = 0;
    /// Inferred direction. On a penalty tie this holds the coin-flip
    /// result and tie_broken_by_coin is set.
    Direction direction = Direction::Tie;
    /// |penalty_x_to_y - penalty_y_to_x|
    int strength = 0;
    bool tie_broken_by_coin = false;

    /// Direction implied by the penalties alone, before any coin flip.
    Direction raw_direction() const;
};

/// Left-to-right LZ parse: at each position the candidate phrase is
/// extended while it is already known (or until the sequence ends),
/// then inserted. The parsed phrases partition the input.
Grammar lz_grammar(const SymbolSequence& x);

/// Same parse, but also returns the phrases in parse order (with
/// duplicates, a terminal phrase may repeat an earlier one).
Grammar lz_grammar_traced(const SymbolSequence& x, std::vector<Phrase>& parse_order);

/// Penalty of explaining y with the real-time grammar of x.
/// Lockstep parse: each iteration first advances x by one phrase
/// (while unexhausted), then parses the next y-phrase; a y-phrase that
/// is new to G_y and already present in the current G_x counts toward
/// the overlap. Returns |G_y| - overlap, always in [0, |G_y|].
///
/// Note: a terminal y-phrase that duplicates an earlier y-phrase never
/// increments the overlap; this keeps the result non-negative.
int lz_penalty(const SymbolSequence& x, const SymbolSequence& y);

/// Both directional penalties plus the inferred direction; a tie is
/// resolved by a seeded coin flip.
PenaltyReport causality_report(const SymbolSequence& x, const SymbolSequence& y,
                               std::uint64_t rng_seed);

/// Cardinality of the symmetric difference |gx \ gy| + |gy \ gx|.
int lz_distance(const Grammar& gx, const Grammar& gy);

}  // namespace lzcdt
