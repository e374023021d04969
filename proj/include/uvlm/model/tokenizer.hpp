#pragma once

// Word-level tokenizer over the template vocabulary. Letters group into words,
// every digit and punctuation mark is its own piece, and a piece that follows a
// space carries a leading "▁" marker so decode(encode(s)) == s for
// single-spaced text.

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uvlm::model {

class Tokenizer {
public:
    static constexpr int kPad = 0;
    static constexpr int kBos = 1;
    static constexpr int kEos = 2;
    static constexpr int kUnk = 3;
    static constexpr int kImage = 4;
    static constexpr int kImageEnd = 5;

    /// Vocabulary built deterministically from the template bank.
    static Tokenizer from_templates();

    std::vector<int> encode(std::string_view text) const;
    /// Special tokens are skipped.
    std::string decode(const std::vector<int>& ids) const;

    int vocab_size() const { return static_cast<int>(pieces_.size()); }
    const std::string& piece(int id) const { return pieces_.at(static_cast<std::size_t>(id)); }
    int id_of(const std::string& piece) const;

    /// Splits text into surface pieces (with the space marker) before lookup.
    static std::vector<std::string> split(std::string_view text);

private:
    void add(const std::string& piece);
    std::vector<std::string> pieces_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace uvlm::model
