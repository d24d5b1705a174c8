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

#include "commands.hpp"

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "augmitl/augment.hpp"
#include "augmitl/classifier.hpp"
#include "augmitl/corpus.hpp"
#include "augmitl/entity.hpp"
#include "augmitl/error.hpp"
#include "augmitl/eval.hpp"
#include "augmitl/paraphrase.hpp"
#include "augmitl/report.hpp"
#include "settings.hpp"
#include "svg.hpp"

namespace augmitl::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitComponent = 1;
constexpr int kExitUsage = 2;

struct Context {
  json cfg;          // resolved settings, embedded in every report
  std::string echo;  // cfg serialized
  fs::path dir;      // <out>/<subcommand>
  std::size_t jobs = 1;
};

struct Command {
  CLI::App* app = nullptr;
  std::unique_ptr<SettingsBuilder> settings;
  std::function<void(const json&)> check;
  std::function<void(const Context&)> body;
};

// ---- file helpers ----

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

std::set<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.insert(line.substr(b, e - b + 1));
  }
  return out;
}

Corpus load_corpus(const json& cfg, const std::string& key = "corpus") {
  return read_corpus_file(get_string(cfg, key));
}

// ---- shared settings ----

void add_paraphraser(SettingsBuilder& s) {
  s.option("paraphraser_url", Kind::kString, "",
           "remote paraphraser base URL; the mock is used when empty");
  s.option("thesaurus", Kind::kPath, "",
           "mock thesaurus: JSON object word -> [replacements]");
  s.option("substitution_prob", Kind::kDouble, 0.8, "mock substitution probability");
  s.option("drop_prob", Kind::kDouble, 0.0, "mock token drop probability");
  s.option("noise_rate", Kind::kDouble, 0.0, "mock cross-intent noise rate");
  s.option("mock_seed", Kind::kUInt, 0, "mock paraphraser seed");
}

void check_paraphraser(const json& cfg) {
  in_range(cfg, "substitution_prob", 0.0, 1.0);
  in_range(cfg, "drop_prob", 0.0, 1.0);
  in_range(cfg, "noise_rate", 0.0, 1.0);
}

std::unique_ptr<ParaphraserBackend> make_paraphraser(const json& cfg) {
  const std::string url = get_string(cfg, "paraphraser_url");
  if (!url.empty()) return std::make_unique<RemoteParaphraser>(url);
  MockParaphraserConfig m;
  const std::string thesaurus = get_string(cfg, "thesaurus");
  if (!thesaurus.empty()) {
    json t = read_json_file(thesaurus);
    try {
      m.thesaurus = t.get<std::map<std::string, std::vector<std::string>>>();
    } catch (const json::exception& e) {
      throw ParseError(0, thesaurus + ": " + e.what());
    }
  }
  m.substitution_prob = get_double(cfg, "substitution_prob");
  m.drop_prob = get_double(cfg, "drop_prob");
  m.noise_rate = get_double(cfg, "noise_rate");
  m.seed = get_uint(cfg, "mock_seed");
  return std::make_unique<MockParaphraser>(std::move(m));
}

bool is_url(const std::string& s) {
  return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0;
}

void add_classifier(SettingsBuilder& s) {
  s.option("classifier", Kind::kString, "reference", "'reference' or a classifier server URL");
  s.option("alpha", Kind::kDouble, 1.0, "reference model smoothing");
  s.option("features", Kind::kString, "unigram_bigram", "unigram | unigram_bigram");
}

void check_classifier(const json& cfg) {
  const std::string c = get_string(cfg, "classifier");
  if (c != "reference" && !is_url(c)) {
    throw UsageError("--classifier must be 'reference' or an http(s) URL, got " + c);
  }
  if (!(get_double(cfg, "alpha") > 0)) throw UsageError("alpha must be positive");
  const std::string f = get_string(cfg, "features");
  if (f != "unigram" && f != "unigram_bigram") {
    throw UsageError("--features must be unigram or unigram_bigram, got " + f);
  }
}

std::unique_ptr<ClassifierBackend> make_classifier(const json& cfg) {
  const std::string c = get_string(cfg, "classifier");
  if (is_url(c)) return std::make_unique<RemoteClassifierBackend>(c);
  TrainConfig t;
  t.alpha = get_double(cfg, "alpha");
  t.features = get_string(cfg, "features") == "unigram" ? FeatureSet::kUnigram
                                                        : FeatureSet::kUnigramBigram;
  return std::make_unique<ReferenceBackend>(t);
}

void add_thresholds(SettingsBuilder& s) {
  s.option("conf", Kind::kDouble, 0.9, "confidence threshold for success_conf / all_conf");
  s.option("low_threshold", Kind::kUInt, 50, "inc_low: intents with fewer seeds are augmented");
  s.option("short_threshold", Kind::kDouble, 3.0,
           "exc_short: intents averaging at most this many tokens are skipped");
}

StrategyConfig strategy_config(const json& cfg, Strategy kind) {
  StrategyConfig s;
  s.kind = kind;
  s.conf_threshold = get_double(cfg, "conf");
  s.low_sample_threshold = get_uint(cfg, "low_threshold");
  s.short_len_threshold = get_double(cfg, "short_threshold");
  // conf is checked even when the strategy ignores it.
  StrategyConfig conf_check = s;
  conf_check.kind = Strategy::kSuccessConf;
  try {
    s.validate();
    conf_check.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return s;
}

Strategy strategy_kind(const std::string& name) {
  try {
    return parse_strategy(name);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

// "aug5" is baseline with five paraphrases per seed; "success_conf_aug5"
// names the strategy explicitly.
AugmentationPlan plan_from_spec(const std::string& spec, const json& cfg,
                                const ParaphraserBackend* paraphraser) {
  const auto pos = spec.rfind("aug");
  const std::string digits = pos == std::string::npos ? "" : spec.substr(pos + 3);
  const bool numeric = !digits.empty() &&
                       digits.find_first_not_of("0123456789") == std::string::npos;
  if (!numeric || (pos > 0 && spec[pos - 1] != '_')) {
    throw UsageError("bad variant '" + spec + "'; expected e.g. aug5 or success_conf_aug5");
  }
  AugmentationPlan plan;
  plan.paraphraser = paraphraser;
  plan.n = std::stoul(digits);
  if (plan.n == 0) throw UsageError("variant '" + spec + "' asks for zero paraphrases");
  const Strategy kind = pos == 0 ? Strategy::kBaseline : strategy_kind(spec.substr(0, pos - 1));
  plan.strategy = strategy_config(cfg, kind);
  if (variant_name(plan) != spec) {
    throw UsageError("variant '" + spec + "' should be written '" + variant_name(plan) + "'");
  }
  return plan;
}

void add_seed(SettingsBuilder& s, std::uint64_t fallback) {
  s.option("seed", Kind::kUInt, fallback, "master seed (default: $AUGMITL_SEED, else 0)");
}

// ---- subcommands ----

void define_stats(Command& c) {
  c.settings->positional("corpus", Kind::kPath, "corpus JSONL");
  c.check = [](const json&) {};
  c.body = [](const Context& ctx) {
    Corpus corpus = load_corpus(ctx.cfg);
    write_file(ctx.dir / "stats.json", report::stats_json(corpus_stats(corpus), ctx.echo));
  };
}

void define_paraphrase(Command& c, std::uint64_t seed) {
  c.settings->positional("corpus", Kind::kPath, "corpus JSONL");
  add_seed(*c.settings, seed);
  add_paraphraser(*c.settings);
  c.settings->option("aug_factor", Kind::kUInt, 5, "paraphrases requested per seed");
  c.check = [](const json& cfg) {
    check_paraphraser(cfg);
    if (get_uint(cfg, "aug_factor") == 0) throw UsageError("--aug-factor must be at least 1");
  };
  c.body = [](const Context& ctx) {
    Corpus corpus = load_corpus(ctx.cfg);
    auto backend = make_paraphraser(ctx.cfg);
    ParaphraseSet ps =
        generate(*backend, corpus, get_uint(ctx.cfg, "aug_factor"), get_uint(ctx.cfg, "seed"));
    const std::vector<bool> keep = dedup_mask(corpus, ps.candidates);

    std::string lines;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < ps.candidates.size(); ++i) {
      const ParaphraseCandidate& x = ps.candidates[i];
      json row = {{"text", x.text},         {"seed_id", x.seed_id},
                  {"seed_intent", x.seed_intent}, {"backend", x.backend},
                  {"duplicate", !keep[i]}};
      lines += row.dump() + "\n";
      kept += keep[i] ? 1 : 0;
    }
    write_file(ctx.dir / "candidates.jsonl", lines);

    json summary = {{"config", ctx.cfg},
                    {"n_seeds", corpus.seeds().size()},
                    {"n_requested", ps.n_requested},
                    {"n_candidates", ps.candidates.size()},
                    {"n_after_dedup", kept}};
    write_file(ctx.dir / "paraphrase.json", summary.dump(2) + "\n");
  };
}

void define_augment(Command& c, std::uint64_t seed) {
  c.settings->positional("corpus", Kind::kPath, "corpus JSONL");
  add_seed(*c.settings, seed);
  add_paraphraser(*c.settings);
  add_classifier(*c.settings);
  c.settings->option("strategy", Kind::kString, "baseline",
                     "baseline | inc_low | exc_short | success | success_conf | all_conf");
  add_thresholds(*c.settings);
  c.settings->option("aug_factor", Kind::kUInt, 5, "paraphrases requested per seed");
  c.check = [](const json& cfg) {
    check_paraphraser(cfg);
    check_classifier(cfg);
    strategy_config(cfg, strategy_kind(get_string(cfg, "strategy")));
    if (get_uint(cfg, "aug_factor") == 0) throw UsageError("--aug-factor must be at least 1");
  };
  c.body = [](const Context& ctx) {
    const Corpus seeds = load_corpus(ctx.cfg).seeds();
    const StrategyConfig sc =
        strategy_config(ctx.cfg, strategy_kind(get_string(ctx.cfg, "strategy")));
    auto paraphraser = make_paraphraser(ctx.cfg);
    ParaphraseSet ps = generate(*paraphraser, seeds, get_uint(ctx.cfg, "aug_factor"),
                                get_uint(ctx.cfg, "seed"));
    std::unique_ptr<IntentClassifier> model;
    if (is_mitl(sc.kind)) model = make_classifier(ctx.cfg)->train(seeds);
    AugmentationOutcome out = augment(seeds, ps, sc, model.get());
    write_file(ctx.dir / "augmented.jsonl", write_corpus(out.corpus));
    write_file(ctx.dir / "augment.json", report::augmentation_json(out, ctx.echo));
  };
}

void define_cv(Command& c, std::uint64_t seed) {
  c.settings->positional("corpus", Kind::kPath, "corpus JSONL");
  add_seed(*c.settings, seed);
  c.settings->option("k", Kind::kUInt, 10, "folds");
  c.settings->option("runs", Kind::kUInt, 3, "repetitions with fresh fold plans");
  add_paraphraser(*c.settings);
  add_classifier(*c.settings);
  c.settings->option("strategy", Kind::kString, "baseline",
                     "baseline | inc_low | exc_short | success | success_conf | all_conf");
  add_thresholds(*c.settings);
  c.settings->option("aug_factor", Kind::kUInt, 0,
                     "paraphrases per training seed; 0 trains on original data only");
  c.check = [](const json& cfg) {
    check_paraphraser(cfg);
    check_classifier(cfg);
    strategy_config(cfg, strategy_kind(get_string(cfg, "strategy")));
    if (get_uint(cfg, "k") < 2) throw UsageError("--k must be at least 2");
    if (get_uint(cfg, "runs") == 0) throw UsageError("--runs must be at least 1");
  };
  c.body = [](const Context& ctx) {
    const Corpus seeds = load_corpus(ctx.cfg).seeds();
    auto paraphraser = make_paraphraser(ctx.cfg);
    auto classifier = make_classifier(ctx.cfg);
    std::optional<AugmentationPlan> plan;
    if (const std::size_t n = get_uint(ctx.cfg, "aug_factor"); n > 0) {
      plan = AugmentationPlan{
          paraphraser.get(), n,
          strategy_config(ctx.cfg, strategy_kind(get_string(ctx.cfg, "strategy")))};
    }
    CVOptions o;
    o.k = get_uint(ctx.cfg, "k");
    o.runs = get_uint(ctx.cfg, "runs");
    o.master_seed = get_uint(ctx.cfg, "seed");
    o.jobs = ctx.jobs;
    CVReport r = cross_validate(seeds, plan, *classifier, o);
    write_file(ctx.dir / "cv.json", report::cv_json(r, ctx.echo));
    write_file(ctx.dir / "cv.csv", report::cv_csv(r));
  };
}

void define_sweep(Command& c, std::uint64_t seed) {
  c.settings->positional("corpus", Kind::kPath, "corpus JSONL");
  add_seed(*c.settings, seed);
  c.settings->option("variants", Kind::kStringList, json::array({"aug3", "aug5", "aug10"}),
                     "comma-separated variants, e.g. aug5,success_conf_aug5");
  c.settings->option("fractions", Kind::kDoubleList,
                     json::array({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}),
                     "comma-separated training fractions");
  c.settings->option("runs", Kind::kUInt, 3, "repetitions with fresh splits");
  c.settings->option("test_fraction", Kind::kDouble, 0.2, "held-out share per intent");
  c.settings->option("target_f1", Kind::kDouble, nullptr,
                     "also report reduction factors at this F1");
  add_paraphraser(*c.settings);
  add_classifier(*c.settings);
  add_thresholds(*c.settings);
  c.check = [](const json& cfg) {
    check_paraphraser(cfg);
    check_classifier(cfg);
    std::set<std::string> seen;
    for (const std::string& v : get_strings(cfg, "variants")) {
      plan_from_spec(v, cfg, nullptr);
      if (!seen.insert(v).second) throw UsageError("variant listed twice: " + v);
    }
    const auto fractions = get_doubles(cfg, "fractions");
    if (fractions.empty()) throw UsageError("--fractions is empty");
    for (double f : fractions) {
      if (!(f > 0 && f <= 1)) throw UsageError("fractions must be in (0, 1]");
    }
    const double t = get_double(cfg, "test_fraction");
    if (!(t > 0 && t < 1)) throw UsageError("--test-fraction must be in (0, 1)");
    if (get_uint(cfg, "runs") == 0) throw UsageError("--runs must be at least 1");
    if (has(cfg, "target_f1")) in_range(cfg, "target_f1", 0.0, 1.0);
  };
  c.body = [](const Context& ctx) {
    const Corpus seeds = load_corpus(ctx.cfg).seeds();
    auto paraphraser = make_paraphraser(ctx.cfg);
    auto classifier = make_classifier(ctx.cfg);
    std::vector<SweepVariant> variants;
    for (const std::string& v : get_strings(ctx.cfg, "variants")) {
      variants.push_back({v, plan_from_spec(v, ctx.cfg, paraphraser.get())});
    }
    SweepOptions o;
    o.fractions = get_doubles(ctx.cfg, "fractions");
    o.runs = get_uint(ctx.cfg, "runs");
    o.master_seed = get_uint(ctx.cfg, "seed");
    o.test_fraction = get_double(ctx.cfg, "test_fraction");
    o.jobs = ctx.jobs;
    SweepReport r = sweep(seeds, variants, *classifier, o);
    write_file(ctx.dir / "sweep.json", report::sweep_json(r, ctx.echo));
    write_file(ctx.dir / "sweep.csv", report::sweep_csv(r));
    write_file(ctx.dir / "sweep.svg", sweep_svg(r));

    if (has(ctx.cfg, "target_f1")) {
      const double target = get_double(ctx.cfg, "target_f1");
      json factors = json::object();
      for (const SweepVariant& v : variants) {
        try {
          factors[v.name] = reduction_factor(r, "original", v.name, target);
        } catch (const InvalidArgument&) {
          factors[v.name] = nullptr;  // a curve never reaches the target
        }
      }
      json doc = {{"config", ctx.cfg}, {"target_f1", target}, {"reduction_factor", factors}};
      write_file(ctx.dir / "reduction.json", doc.dump(2) + "\n");
    }
  };
}

void define_annotate(Command& c) {
  c.settings->positional("corpus", Kind::kPath, "corpus JSONL");
  c.settings->option("entities", Kind::kPath, nullptr,
                     "entity seeds JSONL: {\"entity\": ..., \"values\": [...]}");
  c.settings->option("relatedness", Kind::kPath, nullptr,
                     "pair table JSONL: {\"a\": ..., \"b\": ..., \"score\": ...}");
  c.settings->option("vectors", Kind::kPath, nullptr, "word vectors, one word per line");
  c.settings->option("kg_url", Kind::kString, nullptr, "knowledge graph base URL");
  c.settings->option("nouns", Kind::kPath, nullptr, "noun lexicon, one per line");
  c.settings->option("tau", Kind::kDouble, kDefaultRelatednessThreshold,
                     "admission threshold (strictly greater)");
  c.check = [](const json& cfg) {
    if (!has(cfg, "entities")) throw UsageError("--entities is required");
    const int providers = int(has(cfg, "relatedness")) + int(has(cfg, "vectors")) +
                          int(has(cfg, "kg_url"));
    if (providers != 1) {
      throw UsageError("give exactly one of --relatedness, --vectors, --kg-url");
    }
    const double tau = get_double(cfg, "tau");
    if (!(tau > 0 && tau <= 1)) throw UsageError("--tau must be in (0, 1]");
  };
  c.body = [](const Context& ctx) {
    const Corpus corpus = load_corpus(ctx.cfg);
    std::ifstream seeds_in(get_string(ctx.cfg, "entities"));
    const std::vector<EntitySeed> seeds = parse_entity_seeds(seeds_in);

    std::unique_ptr<RelatednessProvider> provider;
    if (has(ctx.cfg, "relatedness")) {
      std::ifstream in(get_string(ctx.cfg, "relatedness"));
      provider = std::make_unique<StaticTable>(StaticTable::parse(in));
    } else if (has(ctx.cfg, "vectors")) {
      std::ifstream in(get_string(ctx.cfg, "vectors"));
      provider = std::make_unique<VectorFile>(VectorFile::parse(in));
    } else {
      provider = std::make_unique<RemoteKnowledgeGraph>(get_string(ctx.cfg, "kg_url"));
    }
    const LexiconTagger tagger(has(ctx.cfg, "nouns") ? read_lines(get_string(ctx.cfg, "nouns"))
                                                     : std::set<std::string>{});

    const SynonymDictionary dict = build_synonym_dictionary(
        seeds, *provider, candidate_vocabulary(corpus, tagger), get_double(ctx.cfg, "tau"));
    write_file(ctx.dir / "dictionary.json", report::dictionary_json(dict, ctx.echo));
    write_file(ctx.dir / "annotated.jsonl", write_corpus(annotate(corpus, dict, tagger)));
  };
}

void define_score_entities(Command& c) {
  c.settings->positional("gold", Kind::kPath, "gold-annotated corpus JSONL");
  c.settings->positional("predicted", Kind::kPath, "predicted annotations JSONL");
  c.check = [](const json&) {};
  c.body = [](const Context& ctx) {
    const Corpus gold = load_corpus(ctx.cfg, "gold");
    const Corpus predicted = load_corpus(ctx.cfg, "predicted");
    write_file(ctx.dir / "entity_f1.json",
               report::eval_json(entity_f1(gold, predicted), ctx.echo));
  };
}

std::uint64_t env_seed() {
  const char* v = std::getenv("AUGMITL_SEED");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (*end != '\0' || errno != 0 || v[0] == '-') {
    throw UsageError(std::string("AUGMITL_SEED is not a non-negative integer: ") + v);
  }
  return s;
}

int run_checked(int argc, char** argv) {
  const std::uint64_t seed = env_seed();

  CLI::App app{"Paraphrase augmentation with model-in-the-loop filtering for small NLU corpora",
               "augmitl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string out_dir;
  std::size_t jobs = 0;
  auto* config_opt = app.add_option("--config", config_path, "JSON settings file; flags win")
                         ->check(CLI::ExistingFile);
  auto* out_opt = app.add_option("--out", out_dir, "report directory (default: out)");
  auto* jobs_opt = app.add_option("--jobs", jobs, "worker threads (default: 1)")
                       ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));

  std::map<std::string, Command> commands;
  auto add = [&](const std::string& name, const std::string& help) -> Command& {
    Command& c = commands[name];
    c.app = app.add_subcommand(name, help);
    c.settings = std::make_unique<SettingsBuilder>(c.app);
    return c;
  };
  define_stats(add("stats", "corpus statistics"));
  define_paraphrase(add("paraphrase", "generate paraphrase candidates"), seed);
  define_augment(add("augment", "generate, filter and write an augmented corpus"), seed);
  define_cv(add("cv", "k-fold cross-validation, augmenting training folds only"), seed);
  define_sweep(add("sweep", "data-size sweep over augmentation variants"), seed);
  define_annotate(add("annotate", "build a synonym dictionary and annotate entities"));
  define_score_entities(add("score-entities", "entity F1 of predicted against gold spans"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  std::string name;
  for (auto& [n, c] : commands) {
    if (c.app->parsed()) name = n;
  }
  Command& cmd = commands.at(name);

  json file = json::object();
  if (config_opt->count() > 0) {
    try {
      std::ifstream in(config_path);
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(config_path + ": " + e.what());
    }
    if (!file.is_object()) throw UsageError(config_path + ": expected a JSON object");
  }
  // Run-time knobs are accepted in the file but never echoed.
  if (auto it = file.find("out"); it != file.end()) {
    if (!it->is_string()) throw UsageError("config key out must be a string");
    if (out_opt->count() == 0) out_dir = it->get<std::string>();
    file.erase(it);
  }
  if (auto it = file.find("jobs"); it != file.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
      throw UsageError("config key jobs must be a positive integer");
    }
    if (jobs_opt->count() == 0) jobs = it->get<std::size_t>();
    file.erase(it);
  }
  if (out_dir.empty()) out_dir = "out";
  if (jobs == 0) jobs = 1;

  Context ctx;
  ctx.cfg = cmd.settings->resolve(file);
  cmd.check(ctx.cfg);
  ctx.cfg["command"] = name;
  ctx.echo = ctx.cfg.dump();
  ctx.jobs = jobs;
  ctx.dir = fs::path(out_dir) / name;
  std::error_code ec;
  fs::create_directories(ctx.dir, ec);
  if (ec) throw UsageError("cannot create " + ctx.dir.string() + ": " + ec.message());

  try {
    cmd.body(ctx);
  } catch (const Error& e) {
    std::cerr << "augmitl " << name << ": " << e.what() << "\n";
    return kExitComponent;
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  try {
    return run_checked(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "augmitl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "augmitl: " << e.what() << "\n";
    return kExitComponent;
  }
}

}  // namespace augmitl::cli
