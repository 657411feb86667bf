// Copyright 2026 The Aksarakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aksara/tokenizer.hpp"

#include <algorithm>
#include <map>

#include "aksara/error.hpp"
#include "textfile.hpp"

namespace aksara {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Frequency map -> vocabulary. std::map keys give the lexicographic
// tie-break a stable ground truth.
Vocabulary finalize_vocab(const std::map<std::string, std::uint64_t, std::less<>>& counts,
                          int min_count, std::string source_script);

}  // namespace

const std::array<std::string, Vocabulary::kNumSpecials>& Vocabulary::default_markers() {
  static const std::array<std::string, kNumSpecials> markers = {"<pad>", "<unk>", "<s>",
                                                                "</s>"};
  return markers;
}

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

namespace {

Vocabulary finalize_vocab(const std::map<std::string, std::uint64_t, std::less<>>& counts,
                          int min_count, std::string source_script) {
  struct Entry {
    std::string_view token;
    std::uint64_t count;
  };
  std::vector<Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [token, count] : counts) {
    if (count >= static_cast<std::uint64_t>(min_count)) entries.push_back({token, count});
  }
  // Descending frequency; the map iteration order already sorted equal
  // frequencies lexicographically, and stable_sort keeps that order.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.count > b.count; });

  std::vector<std::string> tokens;
  tokens.reserve(Vocabulary::kNumSpecials + entries.size());
  for (const std::string& marker : Vocabulary::default_markers()) tokens.push_back(marker);
  for (const Entry& e : entries) tokens.emplace_back(e.token);
  return Vocabulary::parse_tokens(std::move(tokens), "<built vocabulary>",
                                  std::move(source_script));
}

}  // namespace

Vocabulary Vocabulary::build(std::span<const std::string> lines, int min_count,
                             std::string source_script) {
  if (min_count < 1) throw ValidationError("build_vocab: min_count must be >= 1");
  std::map<std::string, std::uint64_t, std::less<>> counts;
  const auto& markers = default_markers();
  for (const std::string& line : lines) {
    for (std::string_view word : split_words(line)) {
      if (std::find(markers.begin(), markers.end(), word) != markers.end()) continue;
      auto it = counts.find(word);
      if (it == counts.end())
        counts.emplace(std::string(word), 1);
      else
        ++it->second;
    }
  }
  return finalize_vocab(counts, min_count, std::move(source_script));
}

Vocabulary Vocabulary::build(std::istream& lines, int min_count, std::string source_script) {
  if (min_count < 1) throw ValidationError("build_vocab: min_count must be >= 1");
  std::map<std::string, std::uint64_t, std::less<>> counts;
  const auto& markers = default_markers();
  std::string line;
  while (std::getline(lines, line)) {
    for (std::string_view word : split_words(line)) {
      if (std::find(markers.begin(), markers.end(), word) != markers.end()) continue;
      auto it = counts.find(word);
      if (it == counts.end())
        counts.emplace(std::string(word), 1);
      else
        ++it->second;
    }
  }
  return finalize_vocab(counts, min_count, std::move(source_script));
}

Vocabulary Vocabulary::parse_tokens(std::vector<std::string> tokens_in_id_order,
                                    std::string_view source_name, std::string source_script) {
  if (tokens_in_id_order.size() < kNumSpecials) {
    throw ValidationError(std::string(source_name) +
                          ": vocabulary needs at least the four special marker lines");
  }
  Vocabulary vocab;
  vocab.id_to_token_ = std::move(tokens_in_id_order);
  vocab.source_script_ = std::move(source_script);
  vocab.index_tokens(source_name);
  return vocab;
}

void Vocabulary::index_tokens(std::string_view source_name) {
  token_to_id_.reserve(id_to_token_.size());
  for (std::size_t i = 0; i < id_to_token_.size(); ++i) {
    auto [it, inserted] =
        token_to_id_.emplace(std::string_view(id_to_token_[i]), static_cast<TokenId>(i));
    if (!inserted) {
      throw ValidationError(std::string(source_name) + ": duplicate token '" +
                            id_to_token_[i] + "' at IDs " + std::to_string(it->second) +
                            " and " + std::to_string(i));
    }
  }
}

Vocabulary Vocabulary::parse(std::string_view contents, std::string_view source_name) {
  detail::reject_bom(contents, source_name);
  std::vector<std::string> tokens;
  detail::for_each_line(contents,
                        [&](std::size_t, std::string_view line) { tokens.emplace_back(line); });
  return parse_tokens(std::move(tokens), source_name, {});
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  return parse(detail::read_file(path), path.string());
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::string out;
  for (const std::string& token : id_to_token_) {
    out += token;
    out += '\n';
  }
  detail::write_file(path, out);
}

TokenId Vocabulary::id_of(std::string_view token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kUnknownId : it->second;
}

bool Vocabulary::contains(std::string_view token) const {
  return token_to_id_.find(token) != token_to_id_.end();
}

const std::string& Vocabulary::token_of(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= id_to_token_.size()) {
    throw DataError("token ID " + std::to_string(id) + " out of range for vocabulary of size " +
                    std::to_string(id_to_token_.size()));
  }
  return id_to_token_[static_cast<std::size_t>(id)];
}

const std::string& Vocabulary::marker(TokenId special_id) const {
  if (special_id < 0 || static_cast<std::size_t>(special_id) >= kNumSpecials) {
    throw DataError("not a special token ID: " + std::to_string(special_id));
  }
  return id_to_token_[static_cast<std::size_t>(special_id)];
}

std::span<const std::string> Vocabulary::corpus_tokens() const {
  return std::span<const std::string>(id_to_token_).subspan(kNumSpecials);
}

std::string canonicalize(std::string_view text, const RuleTable& to_aksara,
                         const ScriptRules& rules, const RuleTable& to_latin) {
  const TransliterationResult aksara_form = transliterate(text, to_aksara);
  (void)segment_script(aksara_form.output, rules);  // validates, never alters
  const TransliterationResult latin_form = transliterate(aksara_form.output, to_latin);

  std::string collapsed;
  collapsed.reserve(latin_form.output.size());
  bool pending_space = false;
  for (char c : latin_form.output) {
    if (is_space(c)) {
      pending_space = !collapsed.empty();
    } else {
      if (pending_space) collapsed.push_back(' ');
      pending_space = false;
      collapsed.push_back(c);
    }
  }
  return collapsed;
}

Encoding encode(std::string_view text, const Vocabulary& vocab, bool add_sentinels) {
  Encoding encoding;
  const std::vector<std::string_view> words = split_words(text);
  encoding.word_count = words.size();
  encoding.ids.reserve(words.size() + (add_sentinels ? 2 : 0));
  if (add_sentinels) encoding.ids.push_back(Vocabulary::kBeginId);
  for (std::string_view word : words) {
    TokenId id = vocab.id_of(word);
    if (!vocab.contains(word)) {
      encoding.oov_positions.push_back(encoding.ids.size());
    } else if (id < static_cast<TokenId>(Vocabulary::kNumSpecials)) {
      // A corpus word spelled like a reserved marker cannot encode as
      // itself; it degrades to the unknown token but is not OOV.
      id = Vocabulary::kUnknownId;
    }
    encoding.ids.push_back(id);
  }
  if (add_sentinels) encoding.ids.push_back(Vocabulary::kEndId);
  return encoding;
}

std::string decode(std::span<const TokenId> ids, const Vocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const TokenId id = ids[i];
    if (id < 0 || static_cast<std::size_t>(id) >= vocab.size()) {
      throw DataError("decode: ID " + std::to_string(id) + " at position " + std::to_string(i) +
                      " is out of range for vocabulary of size " + std::to_string(vocab.size()));
    }
    if (id == Vocabulary::kPadId) continue;
    if (!out.empty()) out.push_back(' ');
    out += vocab.token_of(id);
  }
  return out;
}

}  // namespace aksara
