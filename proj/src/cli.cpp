#include "ftindex/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ftindex/synthetic.hpp"

namespace ftindex::cli {

namespace {

LoadFactor alpha_from_percent(std::uint32_t percent) {
  if (percent < 1 || percent > 100)
    throw std::invalid_argument("alpha must be 1..100 percent");
  return LoadFactor{static_cast<std::uint16_t>(percent), 100};
}

// Loaded query-side structures assembled from whatever index files the user
// supplied.
struct QueryStand {
  TextCorpus corpus;
  std::optional<SuffixArraySet> sas;
  std::optional<Lut2> lut2;
  std::optional<Lut3> lut3;
  std::optional<HashBucketIndex> ht;
  std::optional<FbcsaIndex> fbcsa;
};

QueryStand assemble(const QueryOptions& options, std::ostream& err) {
  QueryStand stand;
  bool sentinel = true;
  bool first = true;
  std::uint64_t checksum = 0;
  for (const auto& path : options.indexes) {
    const IndexFileHeader h = read_header(path);
    if (first) {
      sentinel = h.sentinel_appended;
      checksum = h.corpus_checksum;
      first = false;
    } else if (h.corpus_checksum != checksum) {
      throw format_error("index files disagree on the corpus checksum");
    }
  }
  if (options.indexes.empty()) throw std::invalid_argument("no index files given");
  stand.corpus = load_text(options.corpus, sentinel);
  if (corpus_checksum(stand.corpus) != checksum)
    throw format_error("corpus does not match the index files (checksum)");
  for (const auto& path : options.indexes) {
    AnyIndex any = load_index(path);
    switch (any.header.kind) {
      case IndexKind::sa:
        stand.sas = std::get<SuffixArraySet>(std::move(any.value));
        break;
      case IndexKind::lut2:
        stand.lut2 = std::get<Lut2>(std::move(any.value));
        break;
      case IndexKind::lut3:
        stand.lut3 = std::get<Lut3>(std::move(any.value));
        break;
      case IndexKind::ht:
        stand.ht = std::get<HashBucketIndex>(std::move(any.value));
        break;
      case IndexKind::fbcsa:
        stand.fbcsa = std::get<FbcsaIndex>(std::move(any.value));
        break;
    }
  }
  if (!stand.fbcsa && !stand.sas)
    throw std::invalid_argument("need a suffix-array or fbcsa index file");
  if (stand.ht && !stand.fbcsa && (!stand.sas || !stand.lut2))
    err << "note: hash index works with a suffix array and a LUT2; "
           "falling back where missing\n";
  return stand;
}

// Route selection: the narrowing option pins one front end, "auto" takes
// the strongest the supplied files allow (hash > lut3 > lut2 > none).
SaInterval query_interval(const QueryStand& st, const std::string& narrowing,
                          ByteSpan pattern) {
  const bool want_hash =
      narrowing == "hash" || (narrowing == "auto" && st.ht && st.lut2);
  const bool want_lut3 =
      narrowing == "lut3" || (narrowing == "auto" && !want_hash && st.lut3);
  const bool want_lut2 = narrowing == "lut2" ||
                         (narrowing == "auto" && !want_hash && !want_lut3 &&
                          st.lut2);
  if (want_hash && (!st.ht || !st.lut2))
    throw std::invalid_argument("hash narrowing needs --index files for the "
                                "hash table and the LUT2");
  if (want_lut3 && !st.lut3)
    throw std::invalid_argument("lut3 narrowing needs a LUT3 index file");
  if (want_lut2 && !st.lut2)
    throw std::invalid_argument("lut2 narrowing needs a LUT2 index file");

  if (st.fbcsa) {
    NarrowingContext ctx;
    Narrowing mode = Narrowing::none;
    if (want_hash) {
      ctx.ht = &*st.ht;
      ctx.lut2 = &*st.lut2;
      mode = Narrowing::hash;
    } else if (want_lut3) {
      ctx.lut3 = &*st.lut3;
      mode = Narrowing::lut3;
    } else if (want_lut2) {
      ctx.lut2 = &*st.lut2;
      mode = Narrowing::lut2;
    }
    return fbcsa_find(st.corpus, *st.fbcsa, pattern, mode, ctx);
  }
  const SuffixArraySet& sas = *st.sas;
  if (want_hash) {
    if (pattern.size() >= st.ht->k)
      return search_hash(st.corpus, sas, *st.ht, *st.lut2, pattern);
    return search_short(st.corpus, sas, *st.lut2, pattern);
  }
  if (want_lut3) {
    SaInterval start = SaInterval::full(st.corpus.size());
    if (const auto iv = lut_narrow(*st.lut3, pattern)) {
      if (iv->empty()) return SaInterval::none();
      start = *iv;
    }
    return refine_interval(st.corpus, sas, pattern, start);
  }
  if (want_lut2) return search_short(st.corpus, sas, *st.lut2, pattern);
  return refine_interval(st.corpus, sas, pattern,
                         SaInterval::full(st.corpus.size()));
}

std::vector<Bytes> read_patterns(const QueryOptions& options) {
  std::vector<Bytes> patterns;
  if (options.pattern) {
    patterns.emplace_back(options.pattern->begin(), options.pattern->end());
  }
  if (options.patterns_file) {
    std::ifstream in(*options.patterns_file, std::ios::binary);
    if (!in) throw io_error("cannot open " + options.patterns_file->string());
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) patterns.emplace_back(line.begin(), line.end());
  }
  if (patterns.empty())
    throw std::invalid_argument("no pattern given (--pattern or --patterns-file)");
  return patterns;
}

IndexVariant variant_from_name(const std::string& name) {
  for (IndexVariant v :
       {IndexVariant::sa, IndexVariant::sa_lut2, IndexVariant::sa_lut3,
        IndexVariant::sa_hash, IndexVariant::fbcsa_none, IndexVariant::fbcsa_lut2,
        IndexVariant::fbcsa_lut3, IndexVariant::fbcsa_hash}) {
    if (name == variant_name(v)) return v;
  }
  throw std::invalid_argument("unknown index variant: " + name);
}

}  // namespace

int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err) {
  const bool sentinel = !options.no_sentinel;
  if (options.kind == "fbcsa" && !sentinel) {
    err << "fbcsa requires the sentinel\n";
    return 1;
  }
  const TextCorpus corpus = load_text(options.corpus, sentinel);
  SuffixArraySet sas;
  if (options.sa_file) {
    sas = load_sa(*options.sa_file);
    const IndexFileHeader h = read_header(*options.sa_file);
    if (h.corpus_checksum != corpus_checksum(corpus))
      throw format_error("--sa file was built over a different corpus");
  } else {
    sas = build_sa(corpus);
  }

  std::uint64_t written = 0;
  if (options.kind == "sa") {
    written = save_index(sas, corpus, options.out);
    out << "sa: n=" << corpus.size() << " bytes=" << sas.sa.size() * 4 << "\n";
  } else if (options.kind == "lut2") {
    const Lut2 lut = build_lut2(corpus, sas);
    written = save_index(lut, corpus, options.out);
    out << "lut2: bytes=" << lut.bytes() << "\n";
  } else if (options.kind == "lut3") {
    const Lut3 lut = build_lut3(corpus, sas);
    written = save_index(lut, corpus, options.out);
    out << "lut3: bytes=" << lut.bytes() << "\n";
  } else if (options.kind == "sahash") {
    const HashBucketIndex ht =
        build_ht(corpus, sas, options.k, alpha_from_percent(options.alpha_percent));
    written = save_index(ht, corpus, options.out);
    out << "sahash: k=" << ht.k << " keys=" << ht.key_count
        << " slots=" << ht.z() << " bytes=" << ht.bytes() << "\n";
  } else if (options.kind == "fbcsa") {
    const FbcsaIndex idx =
        build_fbcsa(corpus, sas, options.bs, options.ss, options.small_blocks);
    written = save_index(idx, corpus, options.out);
    const FbcsaSizeReport sr = size_report(idx);
    out << "fbcsa: bs=" << idx.bs << " ss=" << idx.ss
        << " arr1_bytes=" << sr.arr1_bytes << " arr2_bytes=" << sr.arr2_bytes
        << " total=" << sr.total
        << " total_with_text=" << sr.total + corpus.effective_size() << "\n";
  } else {
    err << "unknown kind: " << options.kind << "\n";
    return 1;
  }
  out << "wrote " << written << " bytes to " << options.out.string() << "\n";
  return 0;
}

int cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& err) {
  const QueryStand stand = assemble(options, err);
  const bool locate = options.mode == "locate";
  if (!locate && options.mode != "count") {
    err << "mode must be count or locate\n";
    return 1;
  }
  for (const Bytes& pattern : read_patterns(options)) {
    const SaInterval iv = query_interval(stand, options.narrowing,
                                         {pattern.data(), pattern.size()});
    if (!locate) {
      out << iv.length() << "\n";
      continue;
    }
    std::vector<std::uint32_t> offsets;
    if (!iv.empty()) {
      offsets.reserve(iv.length());
      for (std::uint64_t r = iv.lo; r <= iv.hi; ++r)
        offsets.push_back(stand.fbcsa ? decode_cell(*stand.fbcsa, r)
                                      : stand.sas->sa[r]);
      std::sort(offsets.begin(), offsets.end());
    }
    for (std::size_t i = 0; i < offsets.size(); ++i)
      out << (i ? " " : "") << offsets[i];
    out << "\n";
  }
  return 0;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.corpus_label = options.corpus.filename().string();
  std::vector<IndexVariant> fbcsa_variants;
  if (options.narrowings.empty()) {
    fbcsa_variants = {IndexVariant::fbcsa_none, IndexVariant::fbcsa_lut2,
                      IndexVariant::fbcsa_lut3, IndexVariant::fbcsa_hash};
  } else {
    for (const auto& name : options.narrowings) {
      if (name == "none") fbcsa_variants.push_back(IndexVariant::fbcsa_none);
      else if (name == "lut2") fbcsa_variants.push_back(IndexVariant::fbcsa_lut2);
      else if (name == "lut3") fbcsa_variants.push_back(IndexVariant::fbcsa_lut3);
      else if (name == "hash") fbcsa_variants.push_back(IndexVariant::fbcsa_hash);
      else {
        err << "unknown narrowing: " << name << "\n";
        return 1;
      }
    }
  }
  if (options.kinds.empty()) {
    config.variants = {IndexVariant::sa, IndexVariant::sa_lut2,
                       IndexVariant::sa_lut3, IndexVariant::sa_hash};
    config.variants.insert(config.variants.end(), fbcsa_variants.begin(),
                           fbcsa_variants.end());
  } else {
    for (const auto& name : options.kinds) {
      if (name == "fbcsa") {
        // Bare kind expands over the selected narrowings.
        config.variants.insert(config.variants.end(), fbcsa_variants.begin(),
                               fbcsa_variants.end());
      } else {
        config.variants.push_back(variant_from_name(name));
      }
    }
  }
  if (options.op == "count") config.op = BenchOp::count;
  else if (options.op == "locate") config.op = BenchOp::locate;
  else if (options.op == "access") config.op = BenchOp::access;
  else if (options.op == "extract") config.op = BenchOp::extract;
  else {
    err << "unknown op: " << options.op << "\n";
    return 1;
  }
  config.pattern_lengths = options.pattern_lengths;
  config.patterns_per_length =
      options.paper_scale ? 500'000 : options.patterns_per_length;
  config.seed = options.seed;
  config.repetitions = options.repetitions;
  config.extract_cells = options.extract_cells;
  config.random_queries = options.random_queries;
  config.k = options.k;
  config.alphas.clear();
  for (std::uint32_t pct : options.alpha_percents)
    config.alphas.push_back(alpha_from_percent(pct));
  config.bs = options.bs;
  config.ss = options.ss;
  config.verify = !options.no_verify;

  const TextCorpus corpus = load_text(options.corpus, true);
  const BenchReport report = run_bench(corpus, config, err);
  if (!report.verified) {
    err << "cross-index verification failed\n";
    return 2;
  }
  if (options.csv) {
    std::ofstream csv(*options.csv);
    if (!csv) throw io_error("cannot write " + options.csv->string());
    write_csv(report, csv);
    err << "wrote " << options.csv->string() << "\n";
  } else {
    write_csv(report, out);
  }
  return 0;
}

int cmd_qgrams(const QgramsOptions& options, std::ostream& out, std::ostream&) {
  const TextCorpus corpus = load_text(options.corpus, false);
  out << "q,distinct\n";
  for (std::uint32_t q : options.qs)
    out << q << ',' << distinct_qgrams(corpus, q) << "\n";
  return 0;
}

int cmd_predict_allht(const PredictAllHtOptions& options, std::ostream& out,
                      std::ostream&) {
  const TextCorpus corpus = load_text(options.corpus, false);
  const AllHtPrediction p =
      predict_allht(corpus, options.m_min, alpha_from_percent(options.alpha_percent));
  out << "text_bytes=" << p.text_bytes << "\n";
  out << "sa_bytes=" << p.sa_bytes << "\n";
  out << "lut2_bytes=" << p.lut2_bytes << "\n";
  for (const auto& [q, bytes] : p.ht_bytes_per_q)
    out << "ht_q" << q << "_bytes=" << bytes << "\n";
  out << "total_bytes=" << p.total << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", p.multiple_of_text);
  out << "multiple_of_text=" << buf << "\n";
  return 0;
}

int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream&) {
  const Bytes text = generate_markov_text(options.size, options.seed);
  std::ofstream file(options.out, std::ios::binary | std::ios::trunc);
  if (!file) throw io_error("cannot write " + options.out.string());
  file.write(reinterpret_cast<const char*>(text.data()),
             static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) throw io_error("write failed");
  out << "wrote " << text.size() << " bytes to " << options.out.string() << "\n";
  return 0;
}

}  // namespace ftindex::cli
