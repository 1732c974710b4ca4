#include "g2atomic/cli.hpp"

#include <CLI11.hpp>

#include <memory>
#include <optional>
#include <vector>

#include "g2atomic/adjusted.hpp"
#include "g2atomic/cache.hpp"
#include "g2atomic/kostka.hpp"
#include "g2atomic/precanonical.hpp"
#include "g2atomic/render.hpp"
#include "g2atomic/sweep.hpp"

namespace g2::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string cache_path;

  std::int64_t a = 0, b = 0, c = 0, d = 0;
  std::string method = "precanonical";
  int level = 6;
  std::int64_t max_a = 8, max_b = 8;
  bool serial = false;
};

Weight weight_arg(std::int64_t a, std::int64_t b) {
  const Weight w{a, b};
  require_dominant(w, "weight argument");
  return w;
}

// Atomic expansions go through the cache when one is configured.
class AtomicSource {
public:
  AtomicSource(const std::string& path, std::ostream& err) {
    if (path.empty()) return;
    cache_ = std::make_unique<AtomicCache>(path);
    if (cache_->load() == AtomicCache::LoadStatus::Rejected)
      err << "warning: ignoring cache " << path << ": " << cache_->reason() << "\n";
  }

  Combination precanonical(Weight lam) {
    if (cache_) {
      if (auto hit = cache_->find(lam)) return *hit;
    }
    Combination x = atomic(lam);
    if (cache_) cache_->insert(lam, x);
    return x;
  }

  void flush() {
    if (cache_ && cache_->dirty()) cache_->save();
  }

private:
  std::unique_ptr<AtomicCache> cache_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Atomic decompositions and Kostka-Foulkes polynomials for affine G2", "g2atomic"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_option("--cache", opt.cache_path, "JSON file of cached atomic expansions");

  auto* atomic_cmd = app.add_subcommand("atomic", "Atomic decomposition of Hbar(a,b)");
  atomic_cmd->add_option("a", opt.a)->required();
  atomic_cmd->add_option("b", opt.b)->required();
  atomic_cmd->add_option("--method", opt.method, "Route to the decomposition")
      ->check(CLI::IsMember({"precanonical", "adjusted"}))
      ->capture_default_str();

  auto* kf_cmd = app.add_subcommand("kf", "Kostka-Foulkes polynomial K_{(a,b),(c,d)}(q)");
  kf_cmd->add_option("a", opt.a)->required();
  kf_cmd->add_option("b", opt.b)->required();
  kf_cmd->add_option("c", opt.c)->required();
  kf_cmd->add_option("d", opt.d)->required();

  auto* standard_cmd = app.add_subcommand("standard", "Hbar(a,b) in the standard basis");
  standard_cmd->add_option("a", opt.a)->required();
  standard_cmd->add_option("b", opt.b)->required();

  auto* expand_cmd = app.add_subcommand("expand", "N^i(a,b) in the canonical basis by its definition");
  expand_cmd->add_option("--level", opt.level, "Pre-canonical level")->required()->check(CLI::Range(2, 6));
  expand_cmd->add_option("a", opt.a)->required();
  expand_cmd->add_option("b", opt.b)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant over a box of dominant weights");
  verify_cmd->add_option("--max-a", opt.max_a)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-b", opt.max_b)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--serial", opt.serial, "Disable the OpenMP path");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  // CLI11 consumes arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(opt.format);
    AtomicSource source(opt.cache_path, err);
    int code = kExitOk;

    if (atomic_cmd->parsed()) {
      const Weight lam = weight_arg(opt.a, opt.b);
      const Combination x = opt.method == "adjusted" ? atomic_second(lam) : source.precanonical(lam);
      out << render_expansion(BasisLabel::canonical(), lam, x, format);
    } else if (kf_cmd->parsed()) {
      const Weight lam = weight_arg(opt.a, opt.b);
      const Weight mu = weight_arg(opt.c, opt.d);
      out << render_kostka(lam, mu, kostka_foulkes(source.precanonical(lam), lam, mu), format);
    } else if (standard_cmd->parsed()) {
      const Weight lam = weight_arg(opt.a, opt.b);
      out << render_expansion(BasisLabel::canonical(), lam, canonical_to_standard(source.precanonical(lam)), format);
    } else if (expand_cmd->parsed()) {
      const Weight lam = weight_arg(opt.a, opt.b);
      out << render_expansion(BasisLabel::precanonical(opt.level), lam, defn_precanonical(opt.level, lam), format);
    } else if (verify_cmd->parsed()) {
      const SweepReport report =
          run_invariant_sweep(opt.max_a, opt.max_b, opt.serial ? Execution::Serial : Execution::Parallel);
      out << render_sweep(report, format);
      if (!report.passed()) code = kExitVerifyFailed;
    }
    source.flush();
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace g2::cli
