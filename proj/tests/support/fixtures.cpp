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

#include "fixtures.hpp"

#include <algorithm>
#include <set>

#include "augmitl/random.hpp"

namespace augmitl::fixtures {

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string keyword(std::size_t intent, std::size_t j) {
  return "k" + std::to_string(intent) + "w" + std::to_string(j);
}

std::string slot_word(std::size_t intent, std::size_t slot, std::size_t variant) {
  static const char* kStems[] = {"flor", "pot", "wat", "sun", "grow", "seed",
                                 "leaf", "root", "bud", "soil", "rain", "stem"};
  return std::string(kStems[intent % 12]) + std::to_string(intent) + "s" +
         std::to_string(slot) + "v" + std::to_string(variant);
}

constexpr std::size_t kSlots = 4;
constexpr std::size_t kVariants = 3;

const std::vector<std::string> kFillers = {
    "please", "the", "can", "we", "now", "i", "want", "to",
    "a", "it", "is", "that", "you", "do", "go"};

}  // namespace

Utterance seed(std::string id, std::string text, std::string intent) {
  Utterance u;
  u.id = std::move(id);
  u.text = std::move(text);
  u.intent = std::move(intent);
  return u;
}

Corpus tiny() {
  return Corpus("tiny", {seed("u1", "yes", "affirm"),
                         seed("u2", "no thanks", "deny"),
                         seed("u3", "ok", "affirm")});
}

Corpus separable(const SeparableSpec& spec) {
  Rng rng(spec.seed);
  std::vector<Utterance> out;
  for (std::size_t i = 0; i < spec.n_intents; ++i) {
    for (std::size_t j = 0; j < spec.per_intent; ++j) {
      const auto len = static_cast<std::size_t>(rng.uniform_int(2, 4));
      std::vector<std::string> tokens;
      for (std::size_t t = 0; t < len; ++t) {
        tokens.push_back(keyword(i, rng.uniform_index(spec.keywords_per_intent)));
      }
      out.push_back(seed("s" + std::to_string(i) + "_" + std::to_string(j),
                         join(tokens), "intent" + std::to_string(i)));
    }
  }
  return Corpus("separable", std::move(out));
}

std::map<std::string, std::vector<std::string>> separable_thesaurus(
    const SeparableSpec& spec) {
  std::map<std::string, std::vector<std::string>> th;
  for (std::size_t i = 0; i < spec.n_intents; ++i) {
    for (std::size_t j = 0; j < spec.keywords_per_intent; ++j) {
      for (std::size_t o = 0; o < spec.keywords_per_intent; ++o) {
        if (o != j) th[keyword(i, j)].push_back(keyword(i, o));
      }
    }
  }
  return th;
}

const std::vector<std::string> kPlantingLowIntents = {
    "intro_meadow", "help_affirm", "everyone_understand",
    "oscar_understand", "ask_number", "next_step"};
const std::vector<std::string> kPlantingShortIntents = {
    "affirm", "deny", "answer_flowers", "answer_valid", "answer_invalid"};

Corpus planting_shape() {
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"intro_meadow", 22},   {"help_affirm", 30},     {"everyone_understand", 35},
      {"oscar_understand", 40}, {"ask_number", 45},    {"next_step", 48},
      {"affirm", 555},        {"deny", 242},           {"answer_flowers", 200},
      {"answer_valid", 180},  {"answer_invalid", 160}, {"counting", 150},
      {"out_of_scope", 120},  {"goodbye", 100}};
  const std::vector<std::string> short_words = {"yes", "no", "ok", "sure",
                                                "ten", "five", "nope", "yeah"};
  const std::vector<std::string> long_words = {
      "let", "us", "plant", "the", "flowers", "in", "meadow", "now",
      "how", "many", "pots", "do", "we", "need", "see", "you", "later"};
  Rng rng(1927);
  std::vector<Utterance> out;
  for (const auto& [intent, n] : counts) {
    const bool is_short =
        std::find(kPlantingShortIntents.begin(), kPlantingShortIntents.end(),
                  intent) != kPlantingShortIntents.end();
    for (std::size_t j = 0; j < n; ++j) {
      const auto len = static_cast<std::size_t>(
          is_short ? rng.uniform_int(1, 3) : rng.uniform_int(4, 9));
      const auto& words = is_short ? short_words : long_words;
      std::vector<std::string> tokens;
      for (std::size_t t = 0; t < len; ++t) {
        tokens.push_back(words[rng.uniform_index(words.size())]);
      }
      out.push_back(seed(intent + "_" + std::to_string(j), join(tokens), intent));
    }
  }
  return Corpus("planting_shape", std::move(out));
}

Corpus noisy(const NoisySpec& spec) {
  Rng rng(spec.seed);
  std::vector<Utterance> out;
  const std::size_t n = spec.n_intents;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < spec.per_intent; ++j) {
      std::vector<std::string> tokens;
      // Texts are unique across the corpus; redraw on a repeat.
      do {
        tokens.clear();
        const std::size_t n_slots = rng.bernoulli(0.3) ? 2 : 1;
        for (std::size_t s = 0; s < n_slots; ++s) {
          const std::size_t slot = rng.uniform_index(kSlots);
          const std::size_t variant =
              rng.bernoulli(0.7) ? 0 : 1 + rng.uniform_index(kVariants - 1);
          tokens.push_back(slot_word(i, slot, variant));
        }
        if (rng.bernoulli(0.5)) {
          // Overlap words are shared with the neighbouring intent.
          const std::size_t pair = rng.bernoulli(0.5) ? i : (i + n - 1) % n;
          tokens.push_back("shared" + std::to_string(pair) + "x" +
                           std::to_string(rng.uniform_index(2)));
        }
        const auto n_fill = static_cast<std::size_t>(rng.uniform_int(2, 4));
        for (std::size_t f = 0; f < n_fill; ++f) {
          tokens.push_back(kFillers[rng.uniform_index(kFillers.size())]);
        }
        rng.shuffle(tokens);
      } while (!seen.insert(join(tokens)).second);
      out.push_back(seed("n" + std::to_string(i) + "_" + std::to_string(j),
                         join(tokens), "intent" + std::to_string(i)));
    }
  }
  return Corpus("noisy", std::move(out));
}

std::map<std::string, std::vector<std::string>> noisy_thesaurus(
    const NoisySpec& spec) {
  std::map<std::string, std::vector<std::string>> th;
  for (std::size_t i = 0; i < spec.n_intents; ++i) {
    for (std::size_t s = 0; s < kSlots; ++s) {
      for (std::size_t v = 0; v < kVariants; ++v) {
        for (std::size_t o = 0; o < kVariants; ++o) {
          if (o != v) th[slot_word(i, s, v)].push_back(slot_word(i, s, o));
        }
      }
    }
  }
  return th;
}

SweepReport step_curves(const std::vector<double>& fractions,
                        const std::vector<double>& original,
                        const std::vector<double>& aug) {
  SweepReport r;
  r.fractions = fractions;
  r.variants = {"original", "aug10"};
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    r.curves["original"].push_back({fractions[i], original[i], 0.0});
    r.curves["aug10"].push_back({fractions[i], aug[i], 0.0});
  }
  return r;
}

std::vector<double> grid(double step, std::size_t n) {
  std::vector<double> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(step * static_cast<double>(i));
  return out;
}

EntityCase random_entity_case(std::uint64_t s) {
  static const std::vector<std::string> words = {"plant", "ten",   "10",    "flowers",
                                                 "Flowers,", "pots", "red", "roses",
                                                 "please", "the",   "42!",   "garden"};
  static const std::vector<std::string> keys = {"ten",     "10",           "flowers", "pots",
                                                "red roses", "roses",      "garden",  "10 pots",
                                                "flowers pots", "42",      "plant"};
  static const std::vector<std::string> types = {"number", "object", "thing"};
  EntityCase out;
  out.nouns = {"flowers", "pots", "roses", "garden"};
  Rng rng(s);
  std::size_t next_score = 0;
  for (const std::string& k : keys) {
    if (rng.bernoulli(0.5)) continue;
    const std::string& type = types[rng.uniform_index(types.size())];
    out.dict.entries[type][k] = 0.7 + 0.001 * static_cast<double>(++next_score);
    if (rng.bernoulli(0.2)) {
      out.dict.entries[types[(rng.uniform_index(2) + 1) % 3]][k] =
          0.7 + 0.001 * static_cast<double>(++next_score);
    }
  }
  std::vector<Utterance> us;
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, 20));
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    const auto len = rng.uniform_int(1, 6);
    for (std::int64_t t = 0; t < len; ++t) {
      if (!text.empty()) text += rng.bernoulli(0.2) ? "  " : " ";
      text += words[rng.uniform_index(words.size())];
    }
    us.push_back(seed("u" + std::to_string(i), text, "x"));
  }
  out.corpus = Corpus("c", us);
  return out;
}

std::vector<std::string> random_labels(std::size_t n, std::size_t n_labels,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back("c" + std::to_string(rng.uniform_index(n_labels)));
  }
  return out;
}

}  // namespace augmitl::fixtures
