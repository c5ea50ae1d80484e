#include "aptree/vocab.hpp"

#include <fstream>
#include <sstream>

#include "aptree/errors.hpp"
#include "json.hpp"

namespace aptree {

using json = nlohmann::json;

vocabulary::vocabulary(std::vector<std::string> token_texts, token_id eos)
    : texts_(std::move(token_texts)), eos_(eos) {
    if (eos_ < 0 || eos_ >= static_cast<token_id>(texts_.size())) {
        raise(errc::parse_error, "eos id " + std::to_string(eos_) + " out of range");
    }
    if (!texts_[eos_].empty()) {
        raise(errc::parse_error, "eos token text must be empty");
    }
    by_text_.reserve(texts_.size());
    trie_.emplace_back(); // root
    for (token_id id = 0; id < static_cast<token_id>(texts_.size()); ++id) {
        const std::string& t = texts_[id];
        if (id != eos_ && t.empty()) {
            raise(errc::parse_error, "token " + std::to_string(id) + " has empty text");
        }
        if (!by_text_.emplace(std::string_view(t), id).second) {
            raise(errc::parse_error, "duplicate token text: \"" + t + "\"");
        }
        if (t.empty()) {
            continue; // eos never participates in matching
        }
        int32_t node = 0;
        for (unsigned char b : t) {
            auto it = trie_[node].next.find(b);
            if (it == trie_[node].next.end()) {
                trie_.emplace_back();
                it = trie_[node].next.emplace(b, static_cast<int32_t>(trie_.size() - 1)).first;
            }
            node = it->second;
        }
        trie_[node].terminal = id;
    }
}

vocabulary vocabulary::from_json_text(std::string_view json_text, const std::string& origin) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) {
        raise(errc::parse_error, origin + ": not valid JSON");
    }
    if (!doc.is_object() || !doc.contains("tokens") || !doc["tokens"].is_array() ||
        !doc.contains("eos") || !doc["eos"].is_number_integer()) {
        raise(errc::parse_error, origin + ": expected {\"tokens\": [...], \"eos\": n}");
    }
    std::vector<std::string> texts;
    texts.reserve(doc["tokens"].size());
    for (const auto& t : doc["tokens"]) {
        if (!t.is_string()) {
            raise(errc::parse_error, origin + ": token entries must be strings");
        }
        texts.push_back(t.get<std::string>());
    }
    return vocabulary(std::move(texts), doc["eos"].get<token_id>());
}

vocabulary vocabulary::from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(errc::io_error, "cannot open vocabulary file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str(), path);
}

const std::string& vocabulary::text(token_id id) const {
    if (id < 0 || id >= static_cast<token_id>(texts_.size())) {
        raise(errc::unknown_token, "token id " + std::to_string(id));
    }
    return texts_[id];
}

token_id vocabulary::id_of(std::string_view text) const {
    auto it = by_text_.find(text);
    if (it == by_text_.end()) {
        raise(errc::unknown_token, "no token with text \"" + std::string(text) + "\"");
    }
    return it->second;
}

bool vocabulary::contains_text(std::string_view text) const {
    return by_text_.find(text) != by_text_.end();
}

token_id vocabulary::longest_match(std::string_view text) const {
    int32_t node = 0;
    token_id best = -1;
    for (size_t i = 0; i < text.size(); ++i) {
        auto it = trie_[node].next.find(static_cast<unsigned char>(text[i]));
        if (it == trie_[node].next.end()) {
            break;
        }
        node = it->second;
        if (trie_[node].terminal >= 0) {
            best = trie_[node].terminal;
        }
    }
    return best;
}

std::vector<token_id> vocabulary::encode(std::string_view text) const {
    std::vector<token_id> out;
    size_t pos = 0;
    while (pos < text.size()) {
        token_id t = longest_match(text.substr(pos));
        if (t < 0) {
            raise(errc::uncoverable_text,
                  "no token matches at byte offset " + std::to_string(pos));
        }
        out.push_back(t);
        pos += texts_[t].size();
    }
    return out;
}

std::string vocabulary::decode(const std::vector<token_id>& ids) const {
    std::string out;
    for (token_id id : ids) {
        out += text(id); // eos contributes nothing
    }
    return out;
}

int vocabulary::count_tokens(std::string_view text) const {
    return static_cast<int>(encode(text).size());
}

} // namespace aptree
