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

#include "augmitl/entity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <sstream>
#include <tuple>

#include "augmitl/error.hpp"
#include "augmitl/text.hpp"
#include "json.hpp"

namespace augmitl {

namespace {

using json = nlohmann::json;

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

std::pair<std::string, std::string> ordered(std::string_view a,
                                            std::string_view b) {
  std::string x(a), y(b);
  if (y < x) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

struct Token {
  text::ByteSpan bytes;
  bool noun_like = false;
};

std::vector<Token> entity_tokens(std::string_view s,
                                 const TaggerBackend& tagger) {
  std::vector<Token> out;
  for (text::ByteSpan span : text::whitespace_token_spans(s)) {
    while (span.begin < span.end && is_ascii_punct(s[span.begin])) ++span.begin;
    while (span.end > span.begin && is_ascii_punct(s[span.end - 1])) --span.end;
    if (span.begin == span.end) continue;
    out.push_back(
        {span, tagger.is_noun_like(s.substr(span.begin, span.end - span.begin))});
  }
  return out;
}

}  // namespace

void StaticTable::set(std::string_view a, std::string_view b, double score) {
  scores_[ordered(normalize_surface(a), normalize_surface(b))] = score;
}

double StaticTable::relatedness(std::string_view a, std::string_view b) const {
  auto it = scores_.find(ordered(normalize_surface(a), normalize_surface(b)));
  return it == scores_.end() ? 0.0 : it->second;
}

StaticTable StaticTable::parse(std::istream& in) {
  StaticTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      json obj = json::parse(line);
      table.set(obj.at("a").get<std::string>(), obj.at("b").get<std::string>(),
                obj.at("score").get<double>());
    } catch (const json::exception& e) {
      throw ParseError(line_no, std::string("relatedness table: ") + e.what());
    }
  }
  return table;
}

void VectorFile::add(std::string word, std::vector<double> vec) {
  if (vec.empty()) throw InvalidArgument("vector for " + word + " is empty");
  if (dim_ == 0) dim_ = vec.size();
  if (vec.size() != dim_) {
    throw InvalidArgument("vector for " + word + " has dimension " +
                          std::to_string(vec.size()) + ", expected " +
                          std::to_string(dim_));
  }
  vectors_[text::to_lower(word)] = std::move(vec);
}

std::vector<double> VectorFile::phrase_vector(std::string_view phrase) const {
  std::vector<double> sum(dim_, 0.0);
  std::size_t known = 0;
  for (const std::string& w : text::tokenize(phrase)) {
    auto it = vectors_.find(w);
    if (it == vectors_.end()) continue;
    for (std::size_t i = 0; i < dim_; ++i) sum[i] += it->second[i];
    ++known;
  }
  if (known == 0) return {};
  for (double& x : sum) x /= static_cast<double>(known);
  return sum;
}

double VectorFile::relatedness(std::string_view a, std::string_view b) const {
  const std::vector<double> va = phrase_vector(a);
  const std::vector<double> vb = phrase_vector(b);
  if (va.empty() || vb.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    dot += va[i] * vb[i];
    na += va[i] * va[i];
    nb += vb[i] * vb[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

VectorFile VectorFile::parse(std::istream& in) {
  VectorFile vf;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> fields = text::split_whitespace(line);
    if (fields.empty()) continue;
    if (fields.size() < 2) throw ParseError(line_no, "word without components");
    std::vector<double> vec;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::istringstream field{std::string(fields[i])};
      double x;
      if (!(field >> x) || !field.eof()) {
        throw ParseError(line_no, "bad vector component: " +
                                      std::string(fields[i]));
      }
      vec.push_back(x);
    }
    try {
      vf.add(std::string(fields[0]), std::move(vec));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return vf;
}

std::string normalize_surface(std::string_view s) {
  return text::to_lower(text::collapse_whitespace(s));
}

SynonymDictionary build_synonym_dictionary(
    const std::vector<EntitySeed>& seeds, const RelatednessProvider& provider,
    const std::set<std::string>& vocabulary, double tau) {
  if (seeds.empty()) throw InvalidArgument("build_synonym_dictionary: no seeds");
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw InvalidArgument("build_synonym_dictionary: tau must be in (0, 1]");
  }
  SynonymDictionary dict;
  for (const EntitySeed& seed : seeds) {
    if (seed.values.empty() || seed.values.size() > kMaxSeedValues) {
      throw InvalidArgument("entity " + seed.entity_type + ": expected 1.." +
                            std::to_string(kMaxSeedValues) + " seed values");
    }
    auto& entry = dict.entries[seed.entity_type];
    std::vector<std::string> values;
    for (const std::string& v : seed.values) {
      values.push_back(normalize_surface(v));
      entry[values.back()] = 1.0;
    }
    for (const std::string& raw : vocabulary) {
      const std::string word = normalize_surface(raw);
      if (word.empty() || entry.count(word)) continue;
      double best = -1.0;
      for (const std::string& v : values) {
        best = std::max(best, provider.relatedness(v, word));
      }
      if (best > tau) entry[word] = best;
    }
  }
  return dict;
}

LexiconTagger::LexiconTagger(std::set<std::string> nouns) {
  for (const std::string& n : nouns) nouns_.insert(text::to_lower(n));
}

bool LexiconTagger::is_noun_like(std::string_view token) const {
  if (!token.empty() &&
      std::all_of(token.begin(), token.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return true;
  }
  return nouns_.count(text::to_lower(token)) != 0;
}

std::vector<CandidateSpan> extract_candidates(std::string_view s,
                                              const TaggerBackend& tagger) {
  const std::vector<Token> tokens = entity_tokens(s, tagger);
  std::vector<text::ByteSpan> spans;
  for (const Token& t : tokens) spans.push_back(t.bytes);
  for (std::size_t i = 0; i < tokens.size();) {
    if (!tokens[i].noun_like) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && tokens[j + 1].noun_like) ++j;
    spans.push_back({tokens[i].bytes.begin, tokens[j].bytes.end});
    i = j + 1;
  }
  std::sort(spans.begin(), spans.end(), [](auto a, auto b) {
    return std::tie(a.begin, a.end) < std::tie(b.begin, b.end);
  });
  std::vector<CandidateSpan> out;
  for (const text::ByteSpan& b : spans) {
    CandidateSpan c{text::byte_to_codepoint(s, b.begin),
                    text::byte_to_codepoint(s, b.end),
                    std::string(s.substr(b.begin, b.end - b.begin))};
    if (!out.empty() && out.back().start == c.start && out.back().end == c.end) {
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::set<std::string> candidate_vocabulary(const Corpus& c,
                                           const TaggerBackend& tagger) {
  std::set<std::string> vocab;
  for (const Utterance& u : c.utterances()) {
    for (const CandidateSpan& span : extract_candidates(u.text, tagger)) {
      vocab.insert(normalize_surface(span.surface));
    }
  }
  return vocab;
}

Corpus annotate(const Corpus& c, const SynonymDictionary& dict,
                const TaggerBackend& tagger) {
  struct Resolved {
    std::string type;
    double score;
    std::vector<std::string> tied;
  };
  std::map<std::string, Resolved> lookup;
  for (const auto& [type, entries] : dict.entries) {
    for (const auto& [surface, score] : entries) {
      auto [it, inserted] = lookup.try_emplace(surface, Resolved{type, score, {}});
      if (inserted) continue;
      Resolved& r = it->second;
      if (score > r.score) {
        r = Resolved{type, score, {}};
      } else if (score == r.score) {
        if (r.tied.empty()) r.tied.push_back(r.type);
        r.tied.push_back(type);
      }
    }
  }
  for (const auto& [surface, r] : lookup) {
    if (r.tied.empty()) continue;
    std::string types;
    for (const std::string& t : r.tied) types += (types.empty() ? "" : ", ") + t;
    throw AmbiguityError("surface \"" + surface +
                         "\" maps to entity types with equal scores: " + types);
  }

  std::vector<Utterance> out;
  out.reserve(c.size());
  for (const Utterance& u : c.utterances()) {
    Utterance copy = u;
    copy.entities.clear();
    std::vector<std::pair<CandidateSpan, const std::string*>> matches;
    for (CandidateSpan& span : extract_candidates(u.text, tagger)) {
      auto it = lookup.find(normalize_surface(span.surface));
      if (it != lookup.end()) matches.emplace_back(std::move(span), &it->second.type);
    }
    std::stable_sort(matches.begin(), matches.end(),
                     [](const auto& a, const auto& b) {
                       const std::size_t la = a.first.end - a.first.start;
                       const std::size_t lb = b.first.end - b.first.start;
                       if (la != lb) return la > lb;
                       return a.first.start < b.first.start;
                     });
    for (const auto& [span, type] : matches) {
      const bool overlaps = std::any_of(
          copy.entities.begin(), copy.entities.end(), [&](const EntitySpan& e) {
            return span.start < e.end && e.start < span.end;
          });
      if (overlaps) continue;
      copy.entities.push_back({span.start, span.end, *type, span.surface});
    }
    std::sort(copy.entities.begin(), copy.entities.end());
    out.push_back(std::move(copy));
  }
  return Corpus(c.name(), std::move(out));
}

EvalReport entity_f1(const Corpus& gold, const Corpus& predicted) {
  std::map<std::string, const Utterance*> pred_by_id;
  for (const Utterance& u : predicted.utterances()) pred_by_id[u.id] = &u;
  if (pred_by_id.size() != gold.size()) {
    throw InvalidArgument("entity_f1: gold and predicted utterance ids differ");
  }
  std::map<std::string, MatchCounts> counts;
  std::size_t n_gold = 0;
  std::size_t n_pred = 0;
  for (const Utterance& g : gold.utterances()) {
    auto it = pred_by_id.find(g.id);
    if (it == pred_by_id.end()) {
      throw InvalidArgument("entity_f1: predicted corpus lacks utterance " +
                            g.id);
    }
    using Key = std::tuple<std::size_t, std::size_t, std::string>;
    std::multiset<Key> remaining;
    for (const EntitySpan& e : g.entities) {
      remaining.insert({e.start, e.end, e.entity_type});
      ++counts[e.entity_type].false_negative;
      ++n_gold;
    }
    for (const EntitySpan& e : it->second->entities) {
      ++n_pred;
      auto match = remaining.find({e.start, e.end, e.entity_type});
      if (match != remaining.end()) {
        remaining.erase(match);
        --counts[e.entity_type].false_negative;
        ++counts[e.entity_type].true_positive;
      } else {
        ++counts[e.entity_type].false_positive;
      }
    }
  }
  EvalReport report = report_from_counts(counts, gold.size());
  if (n_gold == 0 && n_pred == 0) report.weighted_f1 = 1.0;
  return report;
}

std::vector<EntitySeed> parse_entity_seeds(std::istream& in) {
  std::vector<EntitySeed> seeds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      json obj = json::parse(line);
      EntitySeed seed;
      seed.entity_type = obj.at("entity").get<std::string>();
      for (const json& v : obj.at("values")) {
        seed.values.push_back(normalize_surface(v.get<std::string>()));
      }
      if (seed.values.empty() || seed.values.size() > kMaxSeedValues) {
        throw ParseError(line_no, "entity " + seed.entity_type + ": expected 1.." +
                                      std::to_string(kMaxSeedValues) +
                                      " values");
      }
      seeds.push_back(std::move(seed));
    } catch (const json::exception& e) {
      throw ParseError(line_no, std::string("entity seeds: ") + e.what());
    }
  }
  return seeds;
}

}  // namespace augmitl
