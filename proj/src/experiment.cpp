#include "agcode/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "agcode/curve_io.hpp"

namespace agcode {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(splitmix64(seed ^ splitmix64(trial))) {}

std::uint64_t TrialRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("TrialRng::below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> TrialRng::distinct(std::size_t n, std::size_t count) {
  if (count > n) throw std::invalid_argument("cannot draw more distinct indices than available");
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + below(n - i)]);
  pool.resize(count);
  return pool;
}

std::string to_string(ErrorModel m) {
  return m == ErrorModel::uniform_support ? "uniform_support" : "toward_nearest_codeword";
}

ErrorModel parse_error_model(const std::string& s) {
  if (s == "uniform_support" || s == "uniform") return ErrorModel::uniform_support;
  if (s == "toward_nearest_codeword" || s == "toward_nearest") return ErrorModel::toward_nearest_codeword;
  throw std::invalid_argument("unknown error model '" + s + "'");
}

namespace {

// Iterates every vector of F^k; returns false after the last one.
bool next_vector(Vector& v, const Field& F) {
  for (auto& x : v) {
    if (x.value + 1 < F.order()) {
      x = FieldElement{x.value + 1};
      return true;
    }
    x = FieldElement{};
  }
  return false;
}

bool small_code(const CodeSpec& code) {
  const double log_size = static_cast<double>(code.dimension()) * std::log2(code.family().field().order());
  return log_size <= 12.0;
}

}  // namespace

Vector low_weight_codeword(const CodeSpec& code, TrialRng& rng, std::size_t attempts) {
  const Field& F = code.family().field();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (small_code(code)) {
    std::size_t best_w = n + 1;
    std::vector<Vector> best;
    Vector msg(k);
    while (next_vector(msg, F)) {
      Vector cw = code.encode(msg);
      const std::size_t w = hamming_weight(cw);
      if (w < best_w) {
        best_w = w;
        best.clear();
      }
      if (w == best_w) best.push_back(std::move(cw));
    }
    return best[rng.below(best.size())];
  }
  const Matrix& G = code.generator_matrix();
  Vector best;
  std::size_t best_w = n + 1;
  for (std::size_t a = 0; a < attempts; ++a) {
    auto zeros = rng.distinct(n, k - 1);
    std::vector<Vector> cols;
    for (auto i : zeros) cols.push_back(G.col(i));
    // messages m with m . G_Z = 0
    Matrix GZt(zeros.size(), k);
    for (std::size_t r = 0; r < zeros.size(); ++r)
      for (std::size_t c = 0; c < k; ++c) GZt.at(r, c) = cols[r][c];
    auto ker = linalg::kernel(F, GZt);
    if (ker.empty()) continue;
    Vector cw = code.encode(ker[rng.below(ker.size())]);
    const std::size_t w = hamming_weight(cw);
    if (w > 0 && w < best_w) {
      best_w = w;
      best = std::move(cw);
    }
  }
  if (best.empty()) throw std::logic_error("low_weight_codeword: no nonzero codeword found");
  return best;
}

Vector make_error(const CodeSpec& code, const Vector& codeword, std::size_t weight, ErrorModel model, TrialRng& rng) {
  const Field& F = code.family().field();
  const std::size_t n = code.length();
  if (weight > n) throw std::invalid_argument("error weight exceeds code length");
  Vector e(n);
  if (model == ErrorModel::uniform_support) {
    for (auto i : rng.distinct(n, weight)) e[i] = rng.nonzero_element(F);
    return e;
  }
  (void)codeword;  // the direction depends only on the code (linearity)
  const Vector d = low_weight_codeword(code, rng);
  std::vector<std::size_t> support, rest;
  for (std::size_t i = 0; i < n; ++i) (d[i].is_zero() ? rest : support).push_back(i);
  const std::size_t toward = std::min(weight, support.size());
  for (auto idx : rng.distinct(support.size(), toward)) e[support[idx]] = d[support[idx]];
  for (auto idx : rng.distinct(rest.size(), weight - toward)) e[rest[idx]] = rng.nonzero_element(F);
  return e;
}

std::vector<ListEntry> brute_force_list(const CodeSpec& code, const Vector& r, std::size_t tau) {
  const Field& F = code.family().field();
  std::vector<ListEntry> out;
  Vector msg(code.dimension());
  do {
    Vector cw = code.encode(msg);
    const std::size_t d = hamming_distance(cw, r);
    if (d <= tau) out.push_back(ListEntry{msg, std::move(cw), d});
  } while (next_vector(msg, F));
  std::sort(out.begin(), out.end(), [](const ListEntry& a, const ListEntry& b) { return a.message < b.message; });
  return out;
}

ExperimentReport run_experiment(std::shared_ptr<const CodeSpec> code, const ExperimentConfig& cfg,
                                const std::string& code_description) {
  if (cfg.error_weight > code->length()) throw std::invalid_argument("error weight exceeds code length");
  const Field& F = code->family().field();
  const ListDecoder decoder(code);
  DecoderOptions opt;
  opt.tau = cfg.tau;
  opt.earlier_termination = cfg.earlier_termination;
  opt.max_branches = cfg.max_branches;
  opt.max_list = cfg.max_list;
  opt.check_invariants = cfg.check_invariants;

  ExperimentReport rep;
  rep.code_description = code_description;
  rep.config = cfg;
  rep.n = code->length();
  rep.k = code->dimension();
  rep.d_ag = code->d_ag();
  rep.trials.resize(cfg.trials);

  auto run_trial = [&](std::size_t t) {
    TrialRng rng(cfg.seed, t);
    TrialRecord rec;
    rec.trial = t;
    rec.message.resize(code->dimension());
    for (auto& x : rec.message) x = rng.element(F);
    const Vector cw = code->encode(rec.message);
    const Vector e = make_error(*code, cw, cfg.error_weight, cfg.model, rng);
    rec.error_weight = hamming_weight(e);
    rec.received = cw;
    for (std::size_t i = 0; i < cw.size(); ++i) rec.received[i] = F.add(cw[i], e[i]);
    const DecodeResult res = decoder.decode(rec.received, opt);
    rec.list_size = res.list.size();
    rec.partial = res.partial;
    rec.iterations = res.stats.iterations;
    rec.branches = res.stats.branches;
    rec.early_terminations = res.stats.early_terminations;
    rec.invariant_violations = res.stats.invariant_violations;
    rec.basis_repairs = res.stats.basis_repairs;
    for (const auto& entry : res.list) {
      rec.list_messages.push_back(entry.message);
      if (entry.message == rec.message) rec.sent_in_list = true;
    }
    rec.unique_regime = 2 * static_cast<std::int64_t>(rec.error_weight) < code->d_ag() &&
                        2 * static_cast<std::int64_t>(cfg.tau) < code->d_ag();
    if (rec.unique_regime) rec.unique_ok = rec.list_size == 1 && rec.sent_in_list;
    rep.trials[t] = std::move(rec);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cfg.trials)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < cfg.trials; t += workers) run_trial(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  double sum = 0, sumsq = 0;
  for (std::size_t t = 0; t < rep.trials.size(); ++t) {
    const auto& rec = rep.trials[t];
    ++rep.list_size_histogram[rec.list_size];
    rep.sent_in_list += rec.sent_in_list;
    if (rec.error_weight <= cfg.tau && !rec.sent_in_list) ++rep.contract_violations;
    if (!rec.unique_ok) ++rep.unique_failures;
    rep.invariant_violations += rec.invariant_violations;
    rep.partial_results += rec.partial;
    rep.early_terminations += rec.early_terminations;
    rep.basis_repairs += rec.basis_repairs;
    rep.branches_max = std::max(rep.branches_max, rec.branches);
    if (t == 0 || rec.iterations < rep.iter_min) rep.iter_min = rec.iterations;
    rep.iter_max = std::max(rep.iter_max, rec.iterations);
    sum += static_cast<double>(rec.iterations);
    sumsq += static_cast<double>(rec.iterations) * static_cast<double>(rec.iterations);
  }
  if (!rep.trials.empty()) {
    const double cnt = static_cast<double>(rep.trials.size());
    rep.iter_mean = sum / cnt;
    rep.iter_stddev = std::sqrt(std::max(0.0, sumsq / cnt - rep.iter_mean * rep.iter_mean));
  }
  return rep;
}

std::string ExperimentReport::text() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  if (!code_description.empty()) os << "code: " << code_description << "\n";
  os << "parameters: n=" << n << " k=" << k << " d_AG=" << d_ag << "\n";
  os << "trials: " << config.trials << " error_weight: " << config.error_weight << " tau: " << config.tau
     << " seed: " << config.seed << " model: " << to_string(config.model)
     << " earlier_termination: " << (config.earlier_termination ? "on" : "off") << "\n";
  os << "sent_in_list: " << sent_in_list << "/" << trials.size() << "\n";
  os << "list_size_histogram:";
  for (const auto& [size, count] : list_size_histogram) os << " " << size << ":" << count;
  os << "\n";
  os << "iterations: min=" << iter_min << " max=" << iter_max << " mean=" << iter_mean << " stddev=" << iter_stddev
     << "\n";
  os << "branches_max: " << branches_max << "\n";
  os << "early_terminations: " << early_terminations << "\n";
  os << "basis_repairs: " << basis_repairs << "\n";
  os << "partial_results: " << partial_results << "\n";
  os << "unique_regime_failures: " << unique_failures << "\n";
  os << "invariant_violations: " << invariant_violations << "\n";
  os << "contract_violations: " << contract_violations << "\n";
  return os.str();
}

nlohmann::json ExperimentReport::to_json() const {
  using nlohmann::json;
  json hist = json::object();
  for (const auto& [size, count] : list_size_histogram) hist[std::to_string(size)] = count;
  json trial_list = json::array();
  for (const auto& t : trials) {
    trial_list.push_back({{"trial", t.trial},
                          {"error_weight", t.error_weight},
                          {"list_size", t.list_size},
                          {"sent_in_list", t.sent_in_list},
                          {"iterations", t.iterations},
                          {"branches", t.branches},
                          {"partial", t.partial}});
  }
  return json{{"code", code_description},
              {"n", n},
              {"k", k},
              {"d_ag", d_ag},
              {"trials", config.trials},
              {"error_weight", config.error_weight},
              {"tau", config.tau},
              {"seed", config.seed},
              {"error_model", to_string(config.model)},
              {"earlier_termination", config.earlier_termination},
              {"sent_in_list", sent_in_list},
              {"list_size_histogram", hist},
              {"iterations", {{"min", iter_min}, {"max", iter_max}, {"mean", iter_mean}, {"stddev", iter_stddev}}},
              {"branches_max", branches_max},
              {"early_terminations", early_terminations},
              {"basis_repairs", basis_repairs},
              {"partial_results", partial_results},
              {"unique_regime_failures", unique_failures},
              {"invariant_violations", invariant_violations},
              {"contract_violations", contract_violations},
              {"per_trial", trial_list}};
}

}  // namespace agcode
