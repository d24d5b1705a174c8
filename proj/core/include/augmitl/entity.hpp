//
// Copyright 2026 The augmitl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "augmitl/classifier.hpp"
#include "augmitl/corpus.hpp"
#include "augmitl/metrics.hpp"

namespace augmitl {

inline constexpr std::size_t kMaxSeedValues = 6;
inline constexpr double kDefaultRelatednessThreshold = 0.7;

struct EntitySeed {
  std::string entity_type;
  std::vector<std::string> values;  // 1..kMaxSeedValues, normalized
};

// entity type -> surface form -> relatedness score. Seed values score 1.0.
struct SynonymDictionary {
  std::map<std::string, std::map<std::string, double>> entries;

  bool empty() const { return entries.empty(); }
};

// Relatedness between two lexical items, in [-1, 1].
class RelatednessProvider {
 public:
  virtual ~RelatednessProvider() = default;
  virtual double relatedness(std::string_view a, std::string_view b) const = 0;
};

// Explicit symmetric pair table; unlisted pairs score 0.
class StaticTable : public RelatednessProvider {
 public:
  void set(std::string_view a, std::string_view b, double score);
  double relatedness(std::string_view a, std::string_view b) const override;

  // JSONL: {"a": str, "b": str, "score": float}
  static StaticTable parse(std::istream& in);

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

// Word vectors; relatedness is the cosine of the mean vectors of the words
// of each phrase. Unknown words contribute nothing, and a phrase with no
// known word scores 0.
class VectorFile : public RelatednessProvider {
 public:
  void add(std::string word, std::vector<double> vec);
  double relatedness(std::string_view a, std::string_view b) const override;
  std::size_t dimension() const { return dim_; }

  // One line per word: the word, then whitespace-separated components.
  static VectorFile parse(std::istream& in);

 private:
  std::vector<double> phrase_vector(std::string_view phrase) const;

  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::size_t dim_ = 0;
};

// GET /relatedness?node1=<a>&node2=<b> -> {"value": float}. Results are
// memoized per ordered pair; safe for concurrent use.
class RemoteKnowledgeGraph : public RelatednessProvider {
 public:
  explicit RemoteKnowledgeGraph(std::string base_url, HttpOptions opts = {});
  double relatedness(std::string_view a, std::string_view b) const override;
  std::size_t cache_size() const;

 private:
  std::string base_url_;
  HttpOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, std::string>, double> cache_;
};

// Normalization used for dictionary keys and span lookup: lowercase and
// single spaces.
std::string normalize_surface(std::string_view s);

// Throws InvalidArgument if seeds are empty, a value list is empty or longer
// than kMaxSeedValues, or tau is outside (0, 1]. Vocabulary items are
// admitted when their best relatedness to a seed value is strictly greater
// than tau.
SynonymDictionary build_synonym_dictionary(
    const std::vector<EntitySeed>& seeds, const RelatednessProvider& provider,
    const std::set<std::string>& vocabulary,
    double tau = kDefaultRelatednessThreshold);

struct CandidateSpan {
  std::size_t start = 0;  // code points
  std::size_t end = 0;
  std::string surface;

  friend bool operator==(const CandidateSpan&, const CandidateSpan&) = default;
};

class TaggerBackend {
 public:
  virtual ~TaggerBackend() = default;
  virtual bool is_noun_like(std::string_view token) const = 0;
};

// A token is noun-like when its lowercase form is in the lexicon or it is a
// string of ASCII digits.
class LexiconTagger : public TaggerBackend {
 public:
  LexiconTagger() = default;
  explicit LexiconTagger(std::set<std::string> nouns);
  bool is_noun_like(std::string_view token) const override;

 private:
  std::set<std::string> nouns_;
};

// Every token (whitespace-delimited, surrounding ASCII punctuation trimmed)
// plus every maximal run of consecutive noun-like tokens, ordered by
// (start, end) without repeats.
std::vector<CandidateSpan> extract_candidates(std::string_view text,
                                              const TaggerBackend& tagger);

// Normalized surfaces of every candidate in the corpus.
std::set<std::string> candidate_vocabulary(const Corpus& c,
                                           const TaggerBackend& tagger);

// Returns a copy of `c` whose entities are replaced by dictionary matches:
// longest match first, then leftmost, never overlapping. A surface listed
// under several types goes to the highest score; ties raise AmbiguityError.
Corpus annotate(const Corpus& c, const SynonymDictionary& dict,
                const TaggerBackend& tagger);

// Exact (start, end, type) span matching; per-type P/R/F1 weighted by gold
// support. Both corpora must hold the same utterance ids. With no spans on
// either side the weighted F1 is 1.
EvalReport entity_f1(const Corpus& gold, const Corpus& predicted);

// JSONL: {"entity": str, "values": [str]}
std::vector<EntitySeed> parse_entity_seeds(std::istream& in);

}  // namespace augmitl
