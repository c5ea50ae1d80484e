#include "aptree/suppression.hpp"

#include <algorithm>

#include "aptree/errors.hpp"

namespace aptree {

suppression_set::suppression_set(int cap) : cap_(cap) {
    if (cap_ < 1) {
        raise(errc::config_error, "suppression cap must be >= 1");
    }
}

suppression_set::suppression_set(std::initializer_list<std::string> prefixes, int cap)
    : suppression_set(cap) {
    for (const auto& p : prefixes) {
        insert(p);
    }
}

bool suppression_set::insert(std::string prefix) {
    if (prefix.empty()) {
        raise(errc::config_error, "suppression prefixes must be non-empty");
    }
    if (members_.count(prefix)) {
        return false;
    }
    if (static_cast<int>(ordered_.size()) >= cap_) {
        raise(errc::cap_exceeded,
              "suppression set is at its cap of " + std::to_string(cap_) + " prefixes");
    }
    members_.insert(prefix);
    ordered_.push_back(std::move(prefix));
    return true;
}

bool suppression_set::contains(std::string_view prefix) const {
    return members_.count(std::string(prefix)) > 0;
}

bool suppression_set::forbids(std::string_view text) const {
    return std::any_of(ordered_.begin(), ordered_.end(), [&](const std::string& p) {
        return text.substr(0, p.size()) == p;
    });
}

std::string regex_escape(std::string_view text) {
    static constexpr std::string_view meta = R"(\^$.|?*+()[]{})";
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (meta.find(c) != std::string_view::npos) {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string to_regex(const suppression_set& s) {
    if (s.empty()) {
        return ".*";
    }
    std::string out = "(?!";
    bool first = true;
    for (const auto& p : s.prefixes()) {
        if (!first) {
            out += '|';
        }
        out += regex_escape(p);
        first = false;
    }
    out += ").*";
    return out;
}

prefix_automaton::prefix_automaton(const suppression_set& s) {
    if (s.empty()) {
        nodes_.emplace_back(); // lone accept_all state
        start_ = accept_all_ = 0;
        return;
    }
    nodes_.emplace_back(); // trie root = start
    for (const auto& prefix : s.prefixes()) {
        state q = 0;
        for (unsigned char b : prefix) {
            if (nodes_[q].terminal) {
                break; // a shorter member already forbids this path
            }
            auto it = nodes_[q].next.find(b);
            if (it == nodes_[q].next.end()) {
                nodes_.emplace_back();
                nodes_.back().label = nodes_[q].label + static_cast<char>(b);
                it = nodes_[q].next.emplace(b, static_cast<state>(nodes_.size() - 1)).first;
            }
            q = it->second;
        }
        if (!nodes_[q].terminal) {
            nodes_[q].terminal = true;
            nodes_[q].next.clear(); // dead dominates anything below
        }
    }
    nodes_.emplace_back();
    accept_all_ = static_cast<state>(nodes_.size() - 1);
}

prefix_automaton::state prefix_automaton::step(state q, uint8_t byte) const {
    if (q == dead) {
        return dead;
    }
    if (q == accept_all_) {
        return accept_all_;
    }
    if (q < 0 || q >= static_cast<state>(nodes_.size())) {
        raise(errc::unknown_state, "automaton state " + std::to_string(q));
    }
    auto it = nodes_[q].next.find(byte);
    if (it == nodes_[q].next.end()) {
        return accept_all_; // diverged from every live prefix path
    }
    return nodes_[it->second].terminal ? dead : it->second;
}

prefix_automaton::state prefix_automaton::walk(state q, std::string_view bytes) const {
    for (unsigned char b : bytes) {
        q = step(q, b);
        if (q == dead) {
            return dead;
        }
    }
    return q;
}

std::string prefix_automaton::state_label(state q) const {
    if (q == dead) {
        return "<dead>";
    }
    if (q < 0 || q >= static_cast<state>(nodes_.size())) {
        raise(errc::unknown_state, "automaton state " + std::to_string(q));
    }
    return q == accept_all_ ? std::string() : nodes_[q].label;
}

} // namespace aptree
