#pragma once

#include <array>
#include <vector>

#include "frlim/frword.hpp"

namespace frlim {

namespace detail {

/// Depth-first enumeration of candidate monomials in shortlex order with two
/// prunings: a prefix that already embeds a known maximal word only produces
/// dominated words, and a prefix that cannot finish embedding every origin
/// word in the remaining length produces no candidates at all.  Shortlex
/// order guarantees every dominator of a word is visited before it.
class GameSearch {
 public:
  GameSearch(std::vector<FrWord> origin, std::size_t max_len)
      : origin_(std::move(origin)), max_len_(max_len) {}

  std::vector<FrWord> run() {
    for (std::size_t len = 1; len <= max_len_; ++len) {
      len_ = len;
      class_.clear();
      prefix_.clear();
      orig_pos_.assign(origin_.size(), 0);
      max_pos_.assign(maximal_.size(), 0);
      dfs();
      maximal_.insert(maximal_.end(), class_.begin(), class_.end());
    }
    return maximal_;
  }

 private:
  void dfs() {
    if (prefix_.size() == len_) {
      for (std::size_t i = 0; i < maximal_.size(); ++i)
        if (max_pos_[i] == maximal_[i].size()) return;
      for (std::size_t i = 0; i < origin_.size(); ++i)
        if (orig_pos_[i] != origin_[i].size()) return;
      for (const FrWord& v : class_)
        if (word_contains(prefix_, v)) return;
      class_.push_back(prefix_);
      return;
    }
    // feasibility: every origin embedding must fit in the remaining letters
    std::size_t remaining = len_ - prefix_.size();
    for (std::size_t i = 0; i < origin_.size(); ++i)
      if (origin_[i].size() - orig_pos_[i] > remaining) return;
    // domination: a completed maximal embedding kills the whole subtree
    for (std::size_t i = 0; i < maximal_.size(); ++i)
      if (max_pos_[i] == maximal_[i].size()) return;

    for (char c : {'f', 'r'}) {
      std::vector<std::size_t> save_orig = orig_pos_, save_max = max_pos_;
      for (std::size_t i = 0; i < origin_.size(); ++i)
        if (orig_pos_[i] < origin_[i].size() &&
            (origin_[i][orig_pos_[i]] == 'f' || c == 'r'))
          ++orig_pos_[i];
      for (std::size_t i = 0; i < maximal_.size(); ++i)
        if (max_pos_[i] < maximal_[i].size() &&
            (maximal_[i][max_pos_[i]] == 'f' || c == 'r'))
          ++max_pos_[i];
      prefix_.push_back(c);
      dfs();
      prefix_.pop_back();
      orig_pos_ = std::move(save_orig);
      max_pos_ = std::move(save_max);
    }
  }

  std::vector<FrWord> origin_;
  std::size_t max_len_;
  std::size_t len_ = 0;
  FrWord prefix_;
  std::vector<std::size_t> orig_pos_;  // greedy embedding progress per origin
  std::vector<std::size_t> max_pos_;   // greedy progress per maximal word
  std::vector<FrWord> maximal_;
  std::vector<FrWord> class_;  // accepted in the current length class
};

}  // namespace detail

/// One step of the intersection game: the maximal monomials (under ideal
/// containment) lying in the intersection of all origin ideals, with
/// candidates enumerated up to the sum of the origin lengths.
inline FrSentence game_step(const FrSentence& origin,
                            std::size_t extra_length = 0) {
  if (origin.empty()) throw Error("game origin must be nonempty");
  std::size_t max_len = extra_length;
  for (const FrWord& a : origin) max_len += a.size();
  detail::GameSearch search(std::vector<FrWord>(origin.begin(), origin.end()),
                            max_len);
  std::vector<FrWord> maximal = search.run();
  return FrSentence(maximal.begin(), maximal.end());
}

/// Generations of the game: [origin, gen 2, ..., gen k].
inline std::vector<FrSentence> game(const FrSentence& origin, std::size_t k) {
  if (k < 1) throw Error("need at least one generation");
  std::vector<FrSentence> out = {normalize(origin)};
  for (std::size_t i = 1; i < k; ++i) out.push_back(game_step(out.back()));
  return out;
}

/// The three published game columns (origin plus four further generations).
struct PublishedGame {
  FrSentence origin;
  std::vector<FrSentence> generations;  // generations 2..5
};

inline std::vector<PublishedGame> published_game_tables() {
  return {
      {{"r", "ff"},
       {{"rf", "fr"}, {"rr", "frf"}, {"rrf", "frr"}, {"rrr", "frrf"}}},
      {{"rr", "fff"},
       {{"rrf", "rfr", "frr"},
        {"rrr", "frfrf"},
        {"frrrf", "frfrr", "rrfrf"},
        {"rrrrr", "frfrfrf"}}},
      {{"r", "fff"},
       {{"rff", "frf", "ffr"},
        {"rrr", "frrf", "rfrf", "frfr", "ffrff"},
        {"frrrf", "frfrfr", "rfrfrf"},
        {"rrrrrr", "frfrfrf", "rfrrrfr", "frrrrfr", "rfrrrrf"}}}};
}

/// Comparison of a recomputed game against a published column.
struct GenerationDiff {
  std::size_t generation;  // 2-based, matching the published table
  FrSentence computed;
  FrSentence published;
  FrSentence missing;  // published but not recomputed
  FrSentence extra;    // recomputed but not published
  bool agrees() const { return missing.empty() && extra.empty(); }
};

inline std::vector<GenerationDiff> compare_with_published(
    const PublishedGame& column) {
  std::vector<FrSentence> ours = game(column.origin,
                                      column.generations.size() + 1);
  std::vector<GenerationDiff> out;
  for (std::size_t g = 0; g < column.generations.size(); ++g) {
    GenerationDiff d;
    d.generation = g + 2;
    d.computed = ours[g + 1];
    d.published = column.generations[g];
    for (const FrWord& w : d.published)
      if (!d.computed.count(w)) d.missing.insert(w);
    for (const FrWord& w : d.computed)
      if (!d.published.count(w)) d.extra.insert(w);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace frlim
