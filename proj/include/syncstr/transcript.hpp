#pragma once

#include <cstdint>
#include <vector>

#include "syncstr/string_matching.hpp"
#include "syncstr/symbol_string.hpp"

namespace syncstr {

// One adversarial channel action. Deletions name the 1-based sent position
// they remove. Insertions attach after sent position `pos` (0 inserts before
// the first symbol); several insertions at the same attach point apply in
// script order.
struct EditAction {
    enum class Kind { Delete, Insert };
    Kind kind;
    int pos;
    Symbol symbol = 0;

    static EditAction del(int sent_pos) { return {Kind::Delete, sent_pos, 0}; }
    static EditAction ins(int after_pos, Symbol s) { return {Kind::Insert, after_pos, s}; }
};

using EditScript = std::vector<EditAction>;

// The sent/received pair together with the induced position correspondence.
struct Transcript {
    SymbolString sent;
    SymbolString received;
    EditScript script;
    StringMatching correspondence;

    // Per received position: originating sent index, or 0 if inserted.
    std::vector<int> sent_of_received;
    // Per sent position: landing received index, or 0 if deleted.
    std::vector<int> received_of_sent;
    // ins_after[i] counts insertions attached after sent position i (0..n).
    std::vector<int> ins_after;
    std::vector<std::uint8_t> deleted;

    int insertions = 0;
    int deletions = 0;

    int actions() const { return insertions + deletions; }
    int transmitted() const { return sent.size() - deletions; }

    // Channel actions applied strictly after S[a] is sent, up to and including
    // the moment S[b] is sent: a deletion of position p counts for a < p <= b,
    // an insertion attached after position i counts for a <= i <= b-1.
    int error_count(int a, int b) const {
        int c = 0;
        for (int p = a + 1; p <= b; ++p) c += deleted[static_cast<std::size_t>(p - 1)] ? 1 : 0;
        for (int i = a; i <= b - 1; ++i) c += ins_after[static_cast<std::size_t>(i)];
        return c;
    }
};

}  // namespace syncstr
