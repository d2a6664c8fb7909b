#pragma once

#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlhc/mlhc.hpp"

namespace mlhc::cli {

enum class Format { bits, flips };

struct Config {
  int n = 0;
  Format format = Format::bits;
  bool closed = false;
  std::optional<int> max_n_override;

  Limits limits() const { return max_n_override ? Limits::with_override(*max_n_override) : Limits{}; }
};

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

namespace detail {

inline void require_n(const Config& cfg) {
  if (cfg.n < 1) throw domain_error("--n must be >= 1 (got " + std::to_string(cfg.n) + ")");
}

// Runs `body`, mapping library exceptions to exit code 2.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

inline void print_flips(std::ostream& out, const FlipSequence& flips, char sep) {
  for (std::size_t i = 0; i < flips.size(); ++i) {
    if (i) out << sep;
    out << flips[i];
  }
  out << '\n';
}

}  // namespace detail

inline int cmd_generate(const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    const HamiltonCycle hc = assemble(cfg.n, cfg.limits());
    if (cfg.format == Format::flips) {
      for (std::size_t p : hc.flips()) out << p << '\n';
    } else {
      const std::size_t width = hc.width();
      for (Word w : hc.vertices) out << unpack(w, width) << '\n';
      if (cfg.closed && !hc.vertices.empty()) out << unpack(hc.vertices.front(), width) << '\n';
    }
    return kOk;
  });
}

inline int cmd_two_factor(const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    const TwoFactor tf = build_two_factor(cfg.n, cfg.limits());
    for (std::size_t i = 0; i < tf.cycles().size(); ++i) {
      if (i) out << '\n';
      for (Word w : tf.cycles()[i]) out << unpack(w, tf.width()) << '\n';
    }
    return kOk;
  });
}

inline int cmd_sigma(const Config& cfg, const std::string& word, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Bitstring x(word);
    if (cfg.n != 0 && x.size() != 2 * static_cast<std::size_t>(cfg.n)) {
      throw domain_error("word length " + std::to_string(x.size()) + " does not match --n " + std::to_string(cfg.n));
    }
    detail::print_flips(out, sigma(x), ' ');
    return kOk;
  });
}

/// `map` is one of M, N, Minv, Ninv.
inline int cmd_matching(const Config& cfg, const std::string& map, std::istream& in, std::ostream& out,
                        std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    const bool inverse = map == "Minv" || map == "Ninv";
    if (map != "M" && map != "N" && !inverse) throw domain_error("--map must be M, N, Minv or Ninv");
    const Matching which = map.front() == 'M' ? Matching::M : Matching::N;
    const std::size_t width = 2 * static_cast<std::size_t>(cfg.n) + 1;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        const Bitstring x(line);
        if (x.size() != width) {
          throw domain_error("expected " + std::to_string(width) + " bits, got " + std::to_string(x.size()));
        }
        out << apply_matching(which, inverse, x) << '\n';
      } catch (const std::exception& e) {
        throw parse_error(e.what(), line_no);
      }
    }
    return kOk;
  });
}

inline int cmd_six_cycles(const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    for (const auto& p : enumerate_flippable_pairs(cfg.n, cfg.limits())) out << six_cycle(p).pattern << '\n';
    return kOk;
  });
}

/// DOT rendering of H_n; node ids are canonical Dyck words.
inline int cmd_aux_graph(const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    const AuxGraph g = build_aux_graph(cfg.n, cfg.limits());
    out << "graph H" << cfg.n << " {\n";
    for (const auto& c : g.classes) out << "  \"" << c.canonical << "\";\n";
    for (const auto& e : g.edges) {
      out << "  \"" << g.classes[e.from].canonical << "\" -- \"" << g.classes[e.to].canonical << "\" [label=\""
          << e.label.x << "->" << e.label.y << "\"];\n";
    }
    out << "}\n";
    return kOk;
  });
}

inline int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    const VerifyReport r = verify_cycle(in, cfg.n, cfg.closed);
    out << "vertex_count: " << r.vertex_count << '\n'
        << "expected_count: " << r.expected_count << '\n'
        << "duplicates: " << r.duplicates << '\n'
        << "bad_steps: " << r.bad_steps << '\n'
        << "closes: " << (r.closes ? "true" : "false") << '\n'
        << "pass: " << (r.pass ? "true" : "false") << '\n';
    return r.pass ? kOk : kVerifyFailed;
  });
}

inline int cmd_stats(const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    detail::require_n(cfg);
    const Limits limits = cfg.limits();
    const TwoFactor tf = build_two_factor(cfg.n, limits);
    const AuxGraph g = build_aux_graph(cfg.n, limits);
    const auto tree = spanning_tree(g);
    std::size_t catalan = 0;
    for (const auto& c : g.classes) catalan += c.orbit.size();
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["catalan"] = catalan;
    j["vertices"] = tf.index().size();
    j["two_factor_cycles"] = tf.cycles().size();
    j["six_cycles"] = g.edges.size();
    j["aux_nodes"] = g.classes.size();
    j["aux_edges"] = g.edges.size();
    j["spanning_edges"] = tree.size();
    out << j.dump() << '\n';
    return kOk;
  });
}

}  // namespace mlhc::cli
