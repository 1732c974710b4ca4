// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. argv[1] is the path of the g2atomic executable.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "g2atomic/adjusted.hpp"
#include "g2atomic/checks.hpp"
#include "g2atomic/cli.hpp"
#include "g2atomic/kostka.hpp"
#include "g2atomic/precanonical.hpp"
#include "g2atomic/serialize.hpp"
#include "g2atomic/sweep.hpp"

using namespace g2;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string cli_path;

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream os;
    os << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    v.require(seconds < limit_seconds, os.str());
  }
  if (!v.ok) ++failures;
  std::printf("%s AC%d %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), seconds, v.ok ? "" : ": ",
              v.note.c_str());
  std::fflush(stdout);
}

std::string run_in_process(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

// Runs the executable in a fresh process and captures stdout.
std::string run_binary(const std::string& args, int* code = nullptr) {
  const std::string command = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (code) *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

LaurentPoly poly(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> terms) { return LaurentPoly(terms); }

template <typename Fn>
void for_box(std::int64_t max_a, std::int64_t max_b, Fn&& fn) {
  for (std::int64_t a = 0; a <= max_a; ++a)
    for (std::int64_t b = 0; b <= max_b; ++b) fn(Weight{a, b});
}

void check_box(Verdict& v, std::int64_t max, CheckOutcome (*check)(Weight)) {
  for_box(max, max, [&](Weight lam) {
    const CheckOutcome o = check(lam);
    v.require(o.passed, o.name + " at " + lam.to_string() + ": " + o.detail);
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-g2atomic>\n";
    return 64;
  }
  cli_path = argv[1];

  criterion(1, "atomic 2 4 reproduces the reference expansion", 1.0, [](Verdict& v) {
    const std::vector<std::pair<Weight, LaurentPoly>> expected{
        {{2, 4}, poly({{0, 1}})},
        {{3, 3}, poly({{1, 1}})},
        {{1, 4}, poly({{1, 1}})},
        {{4, 2}, poly({{2, 1}})},
        {{2, 3}, poly({{2, 1}, {1, 1}})},
        {{5, 1}, poly({{3, 1}})},
        {{0, 4}, poly({{2, 1}})},
        {{3, 2}, poly({{3, 1}, {2, 1}})},
        {{6, 0}, poly({{4, 1}})},
        {{1, 3}, poly({{3, 1}, {2, 1}})},
        {{4, 1}, poly({{4, 1}, {3, 1}})},
        {{2, 2}, poly({{4, 2}, {3, 1}, {2, 1}})},
        {{5, 0}, poly({{5, 1}, {4, 1}})},
        {{0, 3}, poly({{3, 1}})},
        {{3, 1}, poly({{5, 2}, {4, 1}, {3, 1}})},
        {{1, 2}, poly({{5, 1}, {4, 1}, {3, 1}})},
        {{4, 0}, poly({{6, 2}, {5, 1}, {4, 1}})},
        {{2, 1}, poly({{6, 1}, {5, 2}, {4, 1}, {3, 1}})},
        {{0, 2}, poly({{6, 1}, {4, 1}})},
        {{3, 0}, poly({{7, 1}, {6, 2}, {5, 1}, {4, 1}})},
        {{1, 1}, poly({{7, 1}, {6, 1}, {5, 1}, {4, 1}})},
        {{2, 0}, poly({{8, 2}, {7, 1}, {6, 2}, {5, 1}, {4, 1}})},
        {{1, 0}, poly({{9, 1}, {8, 1}, {7, 1}, {6, 1}, {5, 1}})},
        {{0, 1}, poly({{7, 1}, {5, 1}})},
        {{0, 0}, poly({{10, 1}, {8, 1}, {6, 1}})},
    };
    int code = -1;
    const std::string text = run_in_process({"--format", "json", "atomic", "2", "4"}, &code);
    v.require(code == 0, "nonzero exit code");
    const Expansion got = expansion_from_json(Json::parse(text));
    v.require(got.weight == Weight{2, 4}, "wrong weight in output");
    v.require(got.terms.size() == expected.size(), "support size " + std::to_string(got.terms.size()) + " != 25");
    for (const auto& [mu, p] : expected) v.require(got.terms.coeff(mu) == p, "coefficient mismatch at " + mu.to_string());
    v.require(got.terms.coeff({2, 2}) == poly({{4, 2}, {3, 1}, {2, 1}}), "anchor (2,2)");
    v.require(got.terms.coeff({1, 0}) == poly({{9, 1}, {8, 1}, {7, 1}, {6, 1}, {5, 1}}), "anchor (1,0)");
    v.require(got.terms.coeff({0, 0}) == poly({{10, 1}, {8, 1}, {6, 1}}), "anchor (0,0)");
    const std::string latex = run_in_process({"atomic", "2", "4", "--format", "latex"});
    v.require(latex.starts_with("\\underline{\\mathbf{H}}_{(2,4)} = \\mathbf{N}_{(2,4)} + q\\,\\mathbf{N}_{(3,3)}"),
              "latex display header");
    v.require(latex.ends_with("(q^{10} + q^8 + q^6)\\,\\mathbf{N}_{(0,0)}\n"), "latex display tail");
  });

  criterion(2, "kf 6 9 3 2 reproduces the reference polynomial", 5.0, [](Verdict& v) {
    // Coefficients of q^44 down to q^9.
    const std::array<std::int64_t, 36> expected{1,  1,  2,  3,  5,  6,  9,  10, 14, 16, 19, 21,
                                                26, 27, 31, 33, 37, 38, 42, 42, 46, 46, 48, 47,
                                                51, 48, 50, 45, 40, 31, 26, 18, 14, 8,  4,  1};
    int code = -1;
    const Json j = Json::parse(run_in_process({"--format", "json", "kf", "6", "9", "3", "2"}, &code));
    v.require(code == 0, "nonzero exit code");
    const LaurentPoly k = poly_from_json(j["poly"]);
    LaurentPoly want;
    for (std::size_t i = 0; i < expected.size(); ++i) want.add_term(44 - static_cast<std::int64_t>(i), expected[i]);
    v.require(k == want, "polynomial mismatch");
    v.require(k.term_count() == 36, "term count " + std::to_string(k.term_count()));
    v.require(k.coeff(44) == 1 && k.coeff(38) == 9 && k.coeff(20) == 51 && k.coeff(9) == 1, "spot anchors");
    v.require(run_in_process({"kf", "0", "0", "0", "0"}) == "1\n", "kf 0 0 0 0 != 1");
  });

  const auto box12 = dominant_box(12, 12);

  criterion(3, "atomic coefficients lie in N[q] for a,b <= 12", 60.0, [&](Verdict& v) {
    const auto table = atomic_table(box12, AtomicRoute::Precanonical, Execution::Parallel);
    for (std::size_t i = 0; i < box12.size(); ++i)
      for (const auto& [mu, p] : table[i].terms())
        v.require(p.is_nonnegative(), "negative coefficient in " + box12[i].to_string() + " at " + mu.to_string());
  });

  criterion(4, "both atomic routes agree for a,b <= 12", 120.0, [&](Verdict& v) {
    const auto first = atomic_table(box12, AtomicRoute::Precanonical, Execution::Parallel);
    const auto second = atomic_table(box12, AtomicRoute::Adjusted, Execution::Parallel);
    for (std::size_t i = 0; i < box12.size(); ++i)
      v.require(first[i] == second[i], "routes differ at " + box12[i].to_string());
  });

  criterion(5, "definitional round trip for a,b <= 10", 120.0, [](Verdict& v) {
    for_box(10, 10, [&](Weight lam) {
      const Combination back =
          substitute(atomic(lam), BasisLabel::canonical(), [](Weight mu) { return defn_precanonical(2, mu); });
      v.require(back == Combination::single(BasisLabel::canonical(), lam), "round trip fails at " + lam.to_string());
    });
  });

  criterion(6, "layer changes agree with the closed forms for a,b <= 10", 0, [](Verdict& v) {
    check_box(v, 10, check_closed_forms);
    check_box(v, 10, check_step_inverse_consistency);
    check_box(v, 10, check_levelwise_definitional);
    check_box(v, 10, check_axis_closed_form);
    // The inverse layer table itself, written out independently.
    for_box(10, 10, [&](Weight lam) {
      const auto [a, b] = lam;
      const auto pre = [](int level) { return BasisLabel::precanonical(level); };
      const auto mono = [](std::int64_t c, std::int64_t e) { return LaurentPoly::monomial(c, e); };
      Combination n5 = Combination::single(pre(6), lam);
      if (b >= 1) n5.add_term({a, b - 1}, mono(-1, 1));
      Combination n4 = Combination::single(pre(5), lam);
      if (a >= 3) n4.add_term({a - 3, b + 1}, mono(-1, 1));
      if (a == 1) n4.add_term({0, b}, mono(1, 1));
      if (a == 0 && b >= 1) n4.add_term({1, b - 1}, mono(1, 1));
      Combination n3 = Combination::single(pre(4), lam);
      if (a >= 1) n3.add_term({a - 1, b}, mono(-1, 1));
      if (a == 0 && b >= 2) n3.add_term({2, b - 2}, mono(-1, 2));
      Combination n2 = Combination::single(pre(3), lam);
      if (b >= 1) n2.add_term({a + 1, b - 1}, mono(-1, 1));
      v.require(inverse_step(5, lam) == n5, "inverse_step(5) at " + lam.to_string());
      v.require(inverse_step(4, lam) == n4, "inverse_step(4) at " + lam.to_string());
      v.require(inverse_step(3, lam) == n3, "inverse_step(3) at " + lam.to_string());
      v.require(inverse_step(2, lam) == n2, "inverse_step(2) at " + lam.to_string());
    });
  });

  criterion(7, "recursive X_I membership matches all 16 table rows for a,b <= 10", 0,
            [](Verdict& v) { check_box(v, 10, check_table2); });

  criterion(8, "K(1) equals Freudenthal multiplicities for a,b <= 6", 60.0, [](Verdict& v) {
    v.require(weyl_dimension({1, 0}) == 7, "dim (1,0) != 7");
    v.require(weyl_dimension({0, 1}) == 14, "dim (0,1) != 14");
    v.require(weyl_dimension({2, 0}) == 27, "dim (2,0) != 27");
    for_box(6, 6, [&](Weight lam) {
      std::int64_t total = 0;
      for (const Weight mu : dominant_weights_below(lam)) {
        const std::int64_t m = freudenthal_multiplicity(lam, mu);
        v.require(kostka_foulkes(lam, mu).eval_at_one() == m,
                  "K(1) mismatch at " + lam.to_string() + ", " + mu.to_string());
        total += m * weyl_orbit_size(mu);
      }
      v.require(total == weyl_dimension(lam), "multiplicities do not sum to the dimension at " + lam.to_string());
    });
  });

  criterion(9, "monic degree and monotonicity for a,b <= 6", 0, [](Verdict& v) {
    for_box(6, 6, [&](Weight lam) {
      const auto below = dominant_weights_below(lam);
      const Combination column = canonical_to_standard(lam);
      for (const Weight mu : below) {
        const LaurentPoly k = column.coeff(mu);
        const std::int64_t h = height(lam - mu);
        v.require(k.degree() == h && k.coeff(h) == 1,
                  "not monic of degree ht at " + lam.to_string() + ", " + mu.to_string());
        for (const Weight nu : below) {
          if (!dominance_leq(mu, nu)) continue;
          const LaurentPoly diff = k - LaurentPoly::q_power(height(nu - mu)) * column.coeff(nu);
          v.require(diff.is_nonnegative(),
                    "monotonicity at " + lam.to_string() + ", " + nu.to_string() + ", " + mu.to_string());
        }
      }
    });
  });

  criterion(10, "CLI output is deterministic and JSON round-trips", 0, [](Verdict& v) {
    const std::vector<std::string> commands{
        "atomic 2 4",
        "atomic 2 4 --method adjusted",
        "--format latex atomic 2 4",
        "--format json atomic 5 3",
        "kf 6 9 3 2",
        "--format json kf 6 9 3 2",
        "--format latex kf 4 1 0 0",
        "standard 3 2",
        "--format json standard 3 2",
        "expand --level 3 2 2",
        "--format json expand --level 4 1 3",
        "verify --max-a 2 --max-b 2",
        "--format json verify --max-a 2 --max-b 2",
    };
    for (const std::string& c : commands) {
      int code1 = -1, code2 = -1;
      const std::string first = run_binary(c, &code1);
      const std::string second = run_binary(c, &code2);
      v.require(code1 == 0 && code2 == 0, "nonzero exit for '" + c + "'");
      v.require(!first.empty() && first == second, "output differs between runs of '" + c + "'");
    }
    for (const std::string& c : {"atomic 4 4", "standard 2 3", "expand --level 2 3 1"}) {
      const std::string text = run_binary("--format json " + std::string(c));
      const Json j = Json::parse(text);
      const Expansion e = expansion_from_json(j);
      v.require(expansion_to_json(e.terms, e.weight).dump() + "\n" == text, "JSON round trip for '" + std::string(c) + "'");
    }
    const Json k = Json::parse(run_binary("--format json kf 6 9 3 2"));
    v.require(poly_to_json(poly_from_json(k["poly"])) == k["poly"], "KF JSON round trip");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
