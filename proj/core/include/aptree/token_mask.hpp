#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "aptree/suppression.hpp"
#include "aptree/vocab.hpp"

namespace aptree {

using mask_state = int32_t;

// Per-state allowed-token tables compiled from (S, vocabulary). A token is
// allowed in a state exactly when consuming its bytes never enters the
// automaton's dead state; eos is allowed everywhere. Immutable after
// compile() and shareable across decoding loops.
class token_mask_index {
public:
    static token_mask_index compile(const suppression_set& s, const vocabulary& vocab);

    mask_state start() const { return start_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    int vocab_size() const { return vocab_size_; }
    token_id eos_id() const { return eos_; }

    bool is_state(mask_state q) const {
        return q >= 0 && q < static_cast<mask_state>(states_.size());
    }
    bool is_accept_all(mask_state q) const;

    // O(1) membership test used in the decoding loop.
    bool is_allowed(mask_state q, token_id t) const; // unknown_state

    // Materialized allowed set, ascending token ids; never empty (eos).
    std::vector<token_id> allowed_tokens(mask_state q) const; // unknown_state

    // Tokens masked out in q, ascending ids (debug/inspection view).
    std::vector<token_id> blocked_tokens(mask_state q) const; // unknown_state

    // Successor state for an allowed token; eos is a self-loop.
    mask_state advance(mask_state q, token_id t) const; // unknown_state, mask_violation

private:
    struct state_entry {
        std::vector<uint64_t> allowed_bits;
        // Transitions that stay inside the prefix trie; every other allowed
        // token falls through to accept_all.
        std::unordered_map<token_id, mask_state> trie_succ;
        bool accept_all = false;
    };

    const state_entry& at(mask_state q) const;

    std::vector<state_entry> states_;
    mask_state start_ = 0;
    mask_state accept_all_ = 0;
    int vocab_size_ = 0;
    token_id eos_ = 0;
};

} // namespace aptree
