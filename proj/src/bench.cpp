#include "ftindex/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <thread>

namespace ftindex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

bool uses_fbcsa(IndexVariant v) {
  return v == IndexVariant::fbcsa_none || v == IndexVariant::fbcsa_lut2 ||
         v == IndexVariant::fbcsa_lut3 || v == IndexVariant::fbcsa_hash;
}

bool uses_lut2(IndexVariant v) {
  return v == IndexVariant::sa_lut2 || v == IndexVariant::sa_hash ||
         v == IndexVariant::fbcsa_lut2 || v == IndexVariant::fbcsa_hash;
}

bool uses_lut3(IndexVariant v) {
  return v == IndexVariant::sa_lut3 || v == IndexVariant::fbcsa_lut3;
}

bool uses_ht(IndexVariant v) {
  return v == IndexVariant::sa_hash || v == IndexVariant::fbcsa_hash;
}

// Everything a run needs, built once over one corpus.
struct BenchstandState {
  const TextCorpus* corpus = nullptr;
  SuffixArraySet sas;
  Lut2 lut2;
  Lut3 lut3;
  std::vector<HashBucketIndex> hts;  // one per load factor
  FbcsaIndex fbcsa;
  bool have_lut2 = false, have_lut3 = false, have_fbcsa = false;
};

SaInterval find_interval(const BenchstandState& st, IndexVariant v,
                         std::size_t ht_index, ByteSpan pattern) {
  const TextCorpus& corpus = *st.corpus;
  switch (v) {
    case IndexVariant::sa:
      return refine_interval(corpus, st.sas, pattern,
                             SaInterval::full(corpus.size()));
    case IndexVariant::sa_lut2:
      return search_short(corpus, st.sas, st.lut2, pattern);
    case IndexVariant::sa_lut3: {
      SaInterval start = SaInterval::full(corpus.size());
      if (const auto iv = lut_narrow(st.lut3, pattern)) {
        if (iv->empty()) return SaInterval::none();
        start = *iv;
      }
      return refine_interval(corpus, st.sas, pattern, start);
    }
    case IndexVariant::sa_hash: {
      const HashBucketIndex& ht = st.hts[ht_index];
      if (pattern.size() >= ht.k)
        return search_hash(corpus, st.sas, ht, st.lut2, pattern);
      return search_short(corpus, st.sas, st.lut2, pattern);
    }
    case IndexVariant::fbcsa_none:
      return fbcsa_find(corpus, st.fbcsa, pattern, Narrowing::none, {});
    case IndexVariant::fbcsa_lut2:
      return fbcsa_find(corpus, st.fbcsa, pattern, Narrowing::lut2,
                        {.lut2 = &st.lut2});
    case IndexVariant::fbcsa_lut3:
      return fbcsa_find(corpus, st.fbcsa, pattern, Narrowing::lut3,
                        {.lut3 = &st.lut3});
    case IndexVariant::fbcsa_hash:
      return fbcsa_find(corpus, st.fbcsa, pattern, Narrowing::hash,
                        {.lut2 = &st.lut2, .ht = &st.hts[ht_index]});
  }
  return SaInterval::none();
}

std::uint64_t index_bytes(const BenchstandState& st, IndexVariant v,
                          std::size_t ht_index) {
  const std::uint64_t sa_bytes = st.sas.sa.size() * 4;
  switch (v) {
    case IndexVariant::sa: return sa_bytes;
    case IndexVariant::sa_lut2: return sa_bytes + st.lut2.bytes();
    case IndexVariant::sa_lut3: return sa_bytes + st.lut3.bytes();
    case IndexVariant::sa_hash:
      return sa_bytes + st.lut2.bytes() + st.hts[ht_index].bytes();
    case IndexVariant::fbcsa_none: return size_report(st.fbcsa).total;
    case IndexVariant::fbcsa_lut2:
      return size_report(st.fbcsa).total + st.lut2.bytes();
    case IndexVariant::fbcsa_lut3:
      return size_report(st.fbcsa).total + st.lut3.bytes();
    case IndexVariant::fbcsa_hash:
      return size_report(st.fbcsa).total + st.lut2.bytes() +
             st.hts[ht_index].bytes();
  }
  return 0;
}

std::string alpha_label(LoadFactor a) {
  const double pct = 100.0 * a.value();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g%%", pct);
  return buf;
}

// Occurrence sink; keeps the optimizer from dropping timed query loops.
std::atomic<std::uint64_t> g_sink{0};

}  // namespace

const char* variant_name(IndexVariant v) {
  switch (v) {
    case IndexVariant::sa: return "sa";
    case IndexVariant::sa_lut2: return "sa-lut2";
    case IndexVariant::sa_lut3: return "sa-lut3";
    case IndexVariant::sa_hash: return "sa-hash";
    case IndexVariant::fbcsa_none: return "fbcsa";
    case IndexVariant::fbcsa_lut2: return "fbcsa-lut2";
    case IndexVariant::fbcsa_lut3: return "fbcsa-lut3";
    case IndexVariant::fbcsa_hash: return "fbcsa-hash";
  }
  return "?";
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << "corpus,index,m_or_c,alpha,mean_us,speedup,index_bytes\n";
  for (const BenchRow& r : report.rows) {
    out << r.corpus << ',' << r.index << ',' << r.m_or_c << ',' << r.alpha
        << ',';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", r.mean_us);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.2f", r.speedup);
    out << buf << ',' << r.index_bytes << '\n';
  }
}

BenchReport run_bench(const TextCorpus& corpus, const BenchConfig& config,
                      std::ostream& log) {
  BenchstandState st;
  st.corpus = &corpus;

  log << "building suffix array (n = " << corpus.size() << ") ...\n";
  st.sas = build_sa(corpus);

  bool need_lut2 = false, need_lut3 = false, need_ht = false, need_fbcsa = false;
  for (IndexVariant v : config.variants) {
    need_lut2 |= uses_lut2(v);
    need_lut3 |= uses_lut3(v);
    need_ht |= uses_ht(v);
    need_fbcsa |= uses_fbcsa(v);
  }
  if (need_lut2) {
    st.lut2 = build_lut2(corpus, st.sas);
    st.have_lut2 = true;
  }
  if (need_lut3) {
    st.lut3 = build_lut3(corpus, st.sas);
    st.have_lut3 = true;
  }
  if (need_ht) {
    if (config.alphas.empty())
      throw std::invalid_argument("hash variants need at least one load factor");
    for (LoadFactor a : config.alphas) {
      log << "building hash table (k = " << config.k
          << ", alpha = " << alpha_label(a) << ") ...\n";
      st.hts.push_back(build_ht(corpus, st.sas, config.k, a));
      log << "  " << st.hts.back().key_count << " keys, "
          << st.hts.back().bytes() << " bytes\n";
    }
  }
  if (need_fbcsa) {
    st.fbcsa = build_fbcsa(corpus, st.sas, config.bs, config.ss);
    st.have_fbcsa = true;
  }

  BenchReport report;
  const std::uint64_t text_bytes = corpus.effective_size();

  // Baseline means per (op, length) for the speedup column.
  std::vector<std::pair<std::uint64_t, double>> baseline;
  auto baseline_for = [&](std::uint64_t m_or_c) {
    for (const auto& [len, us] : baseline)
      if (len == m_or_c) return us;
    return 0.0;
  };

  // Variants are timed in declaration order, the plain SA first so the
  // speedup denominator exists.
  std::vector<IndexVariant> ordered = config.variants;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](IndexVariant a, IndexVariant b) {
                     return (a == IndexVariant::sa) > (b == IndexVariant::sa);
                   });

  if (config.op == BenchOp::access || config.op == BenchOp::extract) {
    // Random cell draws; the plain SA answers straight from the array.
    const std::uint64_t c =
        config.op == BenchOp::extract ? config.extract_cells : 1;
    const std::uint64_t n = corpus.size();
    std::vector<std::uint64_t> starts(config.random_queries);
    std::uint64_t state = config.seed;
    for (auto& s : starts) {
      state = splitmix64(state);
      s = state % (n - c + 1);
    }
    for (IndexVariant v : ordered) {
      if (uses_ht(v) || uses_lut2(v) || uses_lut3(v)) {
        log << variant_name(v) << ": narrowing plays no role in cell "
            << "access; skipped\n";
        continue;
      }
      const bool compact = uses_fbcsa(v);
      const std::size_t warmup = std::max<std::size_t>(1, starts.size() / 100);
      std::uint64_t sink = 0;
      for (std::size_t i = 0; i < warmup; ++i)
        sink += compact ? decode_cell(st.fbcsa, starts[i]) : st.sas.sa[starts[i]];
      const auto t0 = std::chrono::steady_clock::now();
      for (std::uint32_t rep = 0; rep < config.repetitions; ++rep) {
        for (std::uint64_t s : starts) {
          for (std::uint64_t j = 0; j < c; ++j)
            sink += compact ? decode_cell(st.fbcsa, s + j) : st.sas.sa[s + j];
        }
      }
      const auto t1 = std::chrono::steady_clock::now();
      g_sink += sink;
      const double us =
          std::chrono::duration<double, std::micro>(t1 - t0).count() /
          (double(starts.size()) * config.repetitions);
      BenchRow row;
      row.corpus = config.corpus_label;
      row.index = variant_name(v);
      row.m_or_c = c;
      row.mean_us = us;
      row.index_bytes = index_bytes(st, v, 0);
      row.text_bytes = text_bytes;
      if (v == IndexVariant::sa) baseline.emplace_back(c, us);
      const double base = baseline_for(c);
      row.speedup = base > 0 ? base / us : 0.0;
      report.rows.push_back(row);
      log << row.index << " " << (config.op == BenchOp::extract ? "extract c="
                                                                : "access c=")
          << c << ": " << row.mean_us << " us/query\n";
    }
    return report;
  }

  for (std::uint32_t m : config.pattern_lengths) {
    const PatternSet patterns =
        sample_patterns(corpus, m, config.patterns_per_length,
                        splitmix64(config.seed ^ m));

    if (config.verify && config.variants.size() > 1) {
      log << "verification pass (m = " << m << ", " << patterns.count()
          << " patterns) ...\n";
      unsigned threads = config.verify_threads;
      if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
      std::atomic<std::uint64_t> mismatches{0};
      auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          const ByteSpan p = patterns.pattern(i);
          const std::uint64_t reference =
              find_interval(st, config.variants[0], 0, p).length();
          for (std::size_t vi = 1; vi < config.variants.size(); ++vi) {
            for (std::size_t h = 0; h < std::max<std::size_t>(
                     uses_ht(config.variants[vi]) ? st.hts.size() : 1, 1); ++h) {
              if (find_interval(st, config.variants[vi], h, p).length() !=
                  reference)
                ++mismatches;
            }
          }
        }
      };
      std::vector<std::thread> pool;
      const std::size_t chunk = (patterns.count() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t b = std::min<std::size_t>(t * chunk, patterns.count());
        const std::size_t e =
            std::min<std::size_t>(b + chunk, patterns.count());
        if (b < e) pool.emplace_back(worker, b, e);
      }
      for (auto& th : pool) th.join();
      if (mismatches > 0) {
        log << "VERIFICATION FAILED: " << mismatches << " mismatching counts\n";
        report.verified = false;
        return report;
      }
    }

    for (IndexVariant v : ordered) {
      const std::size_t ht_runs =
          uses_ht(v) ? std::max<std::size_t>(st.hts.size(), 1) : 1;
      for (std::size_t h = 0; h < ht_runs; ++h) {
        const std::size_t warmup =
            std::max<std::size_t>(1, patterns.count() / 100);
        std::uint64_t occ_total = 0;
        for (std::size_t i = 0; i < warmup; ++i)
          occ_total += find_interval(st, v, h, patterns.pattern(i)).length();

        const auto t0 = std::chrono::steady_clock::now();
        for (std::uint32_t rep = 0; rep < config.repetitions; ++rep) {
          occ_total = 0;
          if (config.op == BenchOp::count) {
            for (std::size_t i = 0; i < patterns.count(); ++i)
              occ_total +=
                  find_interval(st, v, h, patterns.pattern(i)).length();
          } else {
            for (std::size_t i = 0; i < patterns.count(); ++i) {
              const SaInterval iv = find_interval(st, v, h, patterns.pattern(i));
              if (iv.empty()) continue;
              if (uses_fbcsa(v)) {
                for (std::uint64_t r = iv.lo; r <= iv.hi; ++r)
                  occ_total += decode_cell(st.fbcsa, r) != kNil32;
              } else {
                for (std::uint64_t r = iv.lo; r <= iv.hi; ++r)
                  occ_total += st.sas.sa[r] != kNil32;
              }
            }
          }
        }
        const auto t1 = std::chrono::steady_clock::now();
        g_sink += occ_total;

        BenchRow row;
        row.corpus = config.corpus_label;
        row.index = variant_name(v);
        row.m_or_c = m;
        if (uses_ht(v)) row.alpha = alpha_label(config.alphas[h]);
        row.mean_us =
            std::chrono::duration<double, std::micro>(t1 - t0).count() /
            (double(patterns.count()) * config.repetitions);
        row.occ_total = occ_total;
        row.index_bytes = index_bytes(st, v, h);
        row.text_bytes = text_bytes;
        if (v == IndexVariant::sa) baseline.emplace_back(m, row.mean_us);
        const double base = baseline_for(m);
        row.speedup = base > 0 ? base / row.mean_us : 0.0;
        report.rows.push_back(row);
        log << row.index << (row.alpha.empty() ? "" : " a=" + row.alpha)
            << " m=" << m << ": " << row.mean_us << " us/query, occ "
            << occ_total << "\n";
      }
    }
  }
  return report;
}

AllHtPrediction predict_allht(const TextCorpus& corpus, std::uint32_t m_min,
                              LoadFactor alpha) {
  if (!alpha.valid()) throw std::invalid_argument("load factor must be in (0,1]");
  AllHtPrediction p;
  p.text_bytes = corpus.effective_size();
  p.sa_bytes = 4 * corpus.effective_size();
  p.lut2_bytes = Lut2::kKeys * 8;
  std::uint64_t ht_total = 0;
  for (std::uint32_t q = 3; q <= m_min; ++q) {
    std::uint64_t bytes = 0;
    if (q <= corpus.effective_size()) {
      const std::uint64_t dq = distinct_qgrams(corpus, q);
      bytes = ht_slot_count(dq, alpha) * 8;
    }
    p.ht_bytes_per_q.emplace_back(q, bytes);
    ht_total += bytes;
  }
  p.total = p.text_bytes + p.sa_bytes + p.lut2_bytes + ht_total;
  p.multiple_of_text = double(p.total) / double(p.text_bytes);
  return p;
}

}  // namespace ftindex
