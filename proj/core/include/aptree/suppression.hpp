#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace aptree {

inline constexpr int default_suppression_cap = 30;

// The set S of forbidden refusal prefixes. Insertion order is preserved so
// the serialized pattern is stable; duplicate insertion is a no-op. Growing
// past the cap raises cap_exceeded.
class suppression_set {
public:
    explicit suppression_set(int cap = default_suppression_cap);
    suppression_set(std::initializer_list<std::string> prefixes,
                    int cap = default_suppression_cap);

    // Returns true when the prefix was new, false for an idempotent repeat.
    bool insert(std::string prefix);
    bool contains(std::string_view prefix) const;

    int cap() const { return cap_; }
    int size() const { return static_cast<int>(ordered_.size()); }
    bool empty() const { return ordered_.empty(); }
    const std::vector<std::string>& prefixes() const { return ordered_; }

    // True when some member of S is a prefix of `text`.
    bool forbids(std::string_view text) const;

private:
    int cap_;
    std::vector<std::string> ordered_;
    std::unordered_set<std::string> members_;
};

// Anchored negative-lookahead pattern: `(?!e1|e2|...).*`, each prefix
// escaped for the ERE metacharacter set. Empty S serializes to `.*`.
std::string to_regex(const suppression_set& s);

std::string regex_escape(std::string_view text);

// Byte-level automaton over the prefixes of S. Every state except DEAD is
// accepting: a string is valid exactly when no member of S is a prefix of
// it, so proper prefixes of forbidden strings remain valid outputs.
class prefix_automaton {
public:
    using state = int32_t;

    static constexpr state dead = -1;

    explicit prefix_automaton(const suppression_set& s);

    state start() const { return start_; }
    state accept_all() const { return accept_all_; }
    int state_count() const { return static_cast<int>(nodes_.size()); }

    // Single byte transition; dead is absorbing.
    state step(state q, uint8_t byte) const;

    // Walks `bytes` from q; returns dead as soon as it is entered.
    state walk(state q, std::string_view bytes) const;

    // Convenience check from the start state.
    bool admits(std::string_view text) const { return walk(start_, text) != dead; }

    // The byte string consumed to reach q (diagnostics; empty for accept_all).
    std::string state_label(state q) const;

private:
    struct node {
        std::unordered_map<uint8_t, state> next;
        bool terminal = false; // some prefix of S ends here: entering means dead
        std::string label;
    };

    std::vector<node> nodes_; // index 0 is the trie root; accept_all is a node too
    state start_ = 0;
    state accept_all_ = 0;
};

} // namespace aptree
