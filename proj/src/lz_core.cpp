#include "lzcdt/lz_core.hpp"

#include <random>
#include <stdexcept>

namespace lzcdt {

SymbolSequence::SymbolSequence(std::vector<int> syms, int alphabet)
    : symbols(std::move(syms)), alphabet_size(alphabet) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet_size must be >= 1");
    for (int s : symbols) {
        if (s < 0 || s >= alphabet_size)
            throw std::invalid_argument("symbol value out of alphabet range");
    }
}

SymbolSequence SymbolSequence::from_digits(const std::string& digits, int alphabet) {
    std::vector<int> syms;
    syms.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("non-digit in symbol string");
        syms.push_back(c - '0');
    }
    return SymbolSequence(std::move(syms), alphabet);
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::XtoY: return "XtoY";
        case Direction::YtoX: return "YtoX";
        case Direction::Tie: return "Tie";
    }
    return "Tie";
}

Direction PenaltyReport::raw_direction() const {
    if (penalty_x_to_y < penalty_y_to_x) return Direction::XtoY;
    if (penalty_y_to_x < penalty_x_to_y) return Direction::YtoX;
    return Direction::Tie;
}

namespace {

// Cursor over one sequence that yields the next LZ phrase relative to
// a grammar: extend while the candidate is known and input remains.
struct ParseCursor {
    const std::vector<int>& syms;
    std::size_t pos = 0;

    explicit ParseCursor(const SymbolSequence& s) : syms(s.symbols) {}

    bool exhausted() const { return pos >= syms.size(); }

    Phrase next(const Grammar& grammar) {
        Phrase phrase;
        phrase.push_back(static_cast<char>(syms[pos]));
        std::size_t j = pos;
        while (grammar.contains(phrase) && j + 1 < syms.size()) {
            ++j;
            phrase.push_back(static_cast<char>(syms[j]));
        }
        pos = j + 1;
        return phrase;
    }
};

}  // namespace

Grammar lz_grammar(const SymbolSequence& x) {
    Grammar g;
    ParseCursor cursor(x);
    while (!cursor.exhausted()) g.phrases.insert(cursor.next(g));
    return g;
}

Grammar lz_grammar_traced(const SymbolSequence& x, std::vector<Phrase>& parse_order) {
    Grammar g;
    parse_order.clear();
    ParseCursor cursor(x);
    while (!cursor.exhausted()) {
        Phrase p = cursor.next(g);
        parse_order.push_back(p);
        g.phrases.insert(std::move(p));
    }
    return g;
}

int lz_penalty(const SymbolSequence& x, const SymbolSequence& y) {
    Grammar gx, gy;
    ParseCursor cx(x), cy(y);
    int overlap = 0;
    while (!cy.exhausted()) {
        if (!cx.exhausted()) gx.phrases.insert(cx.next(gx));
        Phrase py = cy.next(gy);
        if (!gy.contains(py) && gx.contains(py)) ++overlap;
        gy.phrases.insert(std::move(py));
    }
    return static_cast<int>(gy.size()) - overlap;
}

PenaltyReport causality_report(const SymbolSequence& x, const SymbolSequence& y,
                               std::uint64_t rng_seed) {
    PenaltyReport report;
    report.penalty_x_to_y = lz_penalty(x, y);
    report.penalty_y_to_x = lz_penalty(y, x);
    report.strength = std::abs(report.penalty_x_to_y - report.penalty_y_to_x);
    report.direction = report.raw_direction();
    if (report.direction == Direction::Tie) {
        std::mt19937_64 rng(rng_seed);
        report.direction =
            (rng() & 1u) ? Direction::YtoX : Direction::XtoY;
        report.tie_broken_by_coin = true;
    }
    return report;
}

int lz_distance(const Grammar& gx, const Grammar& gy) {
    int d = 0;
    for (const Phrase& p : gx.phrases)
        if (!gy.contains(p)) ++d;
    for (const Phrase& p : gy.phrases)
        if (!gx.contains(p)) ++d;
    return d;
}

}  // namespace lzcdt
