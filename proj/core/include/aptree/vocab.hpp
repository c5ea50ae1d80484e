#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aptree {

using token_id = int32_t;

// Token vocabulary with ids contiguous from 0. Exactly one token (eos) has
// empty text; every other text is non-empty and unique. Immutable after
// construction, safe to share across threads.
class vocabulary {
public:
    vocabulary(std::vector<std::string> token_texts, token_id eos);

    static vocabulary from_json_file(const std::string& path);
    static vocabulary from_json_text(std::string_view json_text, const std::string& origin = "<inline>");

    int size() const { return static_cast<int>(texts_.size()); }
    token_id eos_id() const { return eos_; }

    const std::string& text(token_id id) const;       // unknown_token
    token_id id_of(std::string_view text) const;      // unknown_token
    bool contains_text(std::string_view text) const;

    // Greedy longest-match segmentation over bytes.
    // decode(encode(t)) == t for any t covered by the vocabulary.
    std::vector<token_id> encode(std::string_view text) const;   // uncoverable_text
    std::string decode(const std::vector<token_id>& ids) const;  // unknown_token
    int count_tokens(std::string_view text) const;

    // Longest token matching at the front of `text`, eos excluded.
    // Returns -1 when no token matches.
    token_id longest_match(std::string_view text) const;

private:
    struct trie_node {
        std::unordered_map<uint8_t, int32_t> next;
        token_id terminal = -1;
    };

    std::vector<std::string> texts_;
    token_id eos_;
    std::unordered_map<std::string_view, token_id> by_text_;
    std::vector<trie_node> trie_;
};

} // namespace aptree
