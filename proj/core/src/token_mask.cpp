#include "aptree/token_mask.hpp"

#include <string>

#include "aptree/errors.hpp"

namespace aptree {

namespace {

bool bit(const std::vector<uint64_t>& bits, token_id t) {
    return (bits[static_cast<size_t>(t) >> 6] >> (t & 63)) & 1u;
}

void set_bit(std::vector<uint64_t>& bits, token_id t) {
    bits[static_cast<size_t>(t) >> 6] |= uint64_t{1} << (t & 63);
}

} // namespace

token_mask_index token_mask_index::compile(const suppression_set& s, const vocabulary& vocab) {
    prefix_automaton automaton(s);

    token_mask_index index;
    index.vocab_size_ = vocab.size();
    index.eos_ = vocab.eos_id();

    const size_t words = (static_cast<size_t>(vocab.size()) + 63) / 64;

    // Automaton states map 1:1 onto mask states; every trie state is
    // reachable in at most |prefix| byte steps, so compiling all of them
    // keeps advance() a pure table lookup.
    index.states_.resize(automaton.state_count());
    index.start_ = automaton.start();
    index.accept_all_ = automaton.accept_all();

    for (mask_state q = 0; q < static_cast<mask_state>(index.states_.size()); ++q) {
        state_entry& entry = index.states_[q];
        entry.allowed_bits.assign(words, 0);
        entry.accept_all = (q == index.accept_all_);
        for (token_id t = 0; t < vocab.size(); ++t) {
            if (t == index.eos_) {
                set_bit(entry.allowed_bits, t); // eos legal outside dead
                continue;
            }
            prefix_automaton::state succ = automaton.walk(q, vocab.text(t));
            if (succ == prefix_automaton::dead) {
                continue;
            }
            set_bit(entry.allowed_bits, t);
            if (succ != automaton.accept_all()) {
                entry.trie_succ.emplace(t, succ);
            }
        }
    }
    return index;
}

const token_mask_index::state_entry& token_mask_index::at(mask_state q) const {
    if (!is_state(q)) {
        raise(errc::unknown_state, "mask state " + std::to_string(q));
    }
    return states_[q];
}

bool token_mask_index::is_accept_all(mask_state q) const {
    return at(q).accept_all;
}

bool token_mask_index::is_allowed(mask_state q, token_id t) const {
    const state_entry& entry = at(q);
    if (t < 0 || t >= vocab_size_) {
        return false;
    }
    return bit(entry.allowed_bits, t);
}

std::vector<token_id> token_mask_index::allowed_tokens(mask_state q) const {
    const state_entry& entry = at(q);
    std::vector<token_id> out;
    for (token_id t = 0; t < vocab_size_; ++t) {
        if (bit(entry.allowed_bits, t)) {
            out.push_back(t);
        }
    }
    return out;
}

std::vector<token_id> token_mask_index::blocked_tokens(mask_state q) const {
    const state_entry& entry = at(q);
    std::vector<token_id> out;
    for (token_id t = 0; t < vocab_size_; ++t) {
        if (!bit(entry.allowed_bits, t)) {
            out.push_back(t);
        }
    }
    return out;
}

mask_state token_mask_index::advance(mask_state q, token_id t) const {
    const state_entry& entry = at(q);
    if (t < 0 || t >= vocab_size_ || !bit(entry.allowed_bits, t)) {
        raise(errc::mask_violation,
              "token " + std::to_string(t) + " is masked in state " + std::to_string(q));
    }
    if (t == eos_) {
        return q;
    }
    auto it = entry.trie_succ.find(t);
    return it == entry.trie_succ.end() ? accept_all_ : it->second;
}

} // namespace aptree
