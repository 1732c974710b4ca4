#include "g2atomic/render.hpp"

#include <cstdlib>
#include <sstream>

#include "g2atomic/serialize.hpp"
#include "g2atomic/sweep.hpp"

namespace g2 {

namespace {

std::string q_power(std::int64_t e, OutputFormat format) {
  if (e == 0) return "";
  if (e == 1) return "q";
  const std::string digits = std::to_string(e);
  if (format == OutputFormat::Latex && digits.size() > 1) return "q^{" + digits + "}";
  return "q^" + digits;
}

// A term's unsigned magnitude, e.g. "2q^4", "q", "3".
std::string magnitude(std::int64_t c, std::int64_t e, OutputFormat format) {
  const std::int64_t abs_c = c < 0 ? -c : c;
  const std::string q = q_power(e, format);
  if (q.empty()) return std::to_string(abs_c);
  return abs_c == 1 ? q : std::to_string(abs_c) + q;
}

std::string weight_subscript(Weight w) { return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")"; }

// Joins signed pieces: "x + y - z", leading "-" kept on the first.
class SignedSum {
public:
  void add(bool negative, const std::string& body) {
    if (out_.empty())
      out_ = negative ? "-" + body : body;
    else
      out_ += (negative ? " - " : " + ") + body;
  }
  [[nodiscard]] std::string str() const { return out_.empty() ? "0" : out_; }

private:
  std::string out_;
};

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string render_poly(const LaurentPoly& p, OutputFormat format) {
  SignedSum sum;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    sum.add(it->second < 0, magnitude(it->second, it->first, format));
  return sum.str();
}

std::string render_element(BasisLabel basis, Weight w, OutputFormat format) {
  const std::string sub = weight_subscript(w);
  const std::string level = std::to_string(basis.level());
  if (format == OutputFormat::Latex) {
    switch (basis.kind()) {
      case BasisLabel::Kind::Canonical: return "\\underline{\\mathbf{H}}_{" + sub + "}";
      case BasisLabel::Kind::Standard: return "\\mathbf{H}_{" + sub + "}";
      case BasisLabel::Kind::Atomic: return "\\mathbf{N}_{" + sub + "}";
      case BasisLabel::Kind::PreCanonical: return "\\mathbf{N}^{" + level + "}_{" + sub + "}";
      case BasisLabel::Kind::Adjusted: return "\\widetilde{\\mathbf{N}}^{" + level + "}_{" + sub + "}";
    }
  }
  switch (basis.kind()) {
    case BasisLabel::Kind::Canonical: return "Hbar" + sub;
    case BasisLabel::Kind::Standard: return "H" + sub;
    case BasisLabel::Kind::Atomic: return "N" + sub;
    case BasisLabel::Kind::PreCanonical: return "N^" + level + sub;
    case BasisLabel::Kind::Adjusted: return "Ntilde^" + level + sub;
  }
  return sub;
}

std::string render_expansion(BasisLabel lhs_basis, Weight lam, const Combination& x, OutputFormat format) {
  if (format == OutputFormat::Json) return expansion_to_json(x, lam).dump() + "\n";
  const std::string gap = format == OutputFormat::Latex ? "\\," : " ";
  SignedSum sum;
  for (const Weight w : sorted_support(x, lam)) {
    const LaurentPoly& c = x.terms().at(w);
    const std::string element = render_element(x.basis(), w, format);
    if (c == LaurentPoly::constant(1) || c == LaurentPoly::constant(-1)) {
      sum.add(c.coeff(0) < 0, element);
    } else if (c.is_monomial()) {
      const auto& [e, k] = *c.terms().begin();
      sum.add(k < 0, magnitude(k, e, format) + gap + element);
    } else {
      sum.add(false, "(" + render_poly(c, format) + ")" + gap + element);
    }
  }
  return render_element(lhs_basis, lam, format) + " = " + sum.str() + "\n";
}

std::string render_kostka(Weight lam, Weight mu, const LaurentPoly& k, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      const Json j{{"lambda", weight_to_json(lam)}, {"mu", weight_to_json(mu)}, {"poly", poly_to_json(k)}};
      return j.dump() + "\n";
    }
    case OutputFormat::Latex:
      return "K_{" + weight_subscript(lam) + "," + weight_subscript(mu) + "}(q) = " + render_poly(k, format) + "\n";
    case OutputFormat::Text:
      break;
  }
  return render_poly(k, OutputFormat::Text) + "\n";
}

std::string render_sweep(const SweepReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json invariants = Json::array();
    for (const InvariantTally& t : report.invariants)
      invariants.push_back(Json{{"name", t.name},
                                {"module", t.module},
                                {"cases", t.cases},
                                {"failures", t.failures},
                                {"first_failure", t.first_failure}});
    const Json j{{"max_a", report.max_a},
                 {"max_b", report.max_b},
                 {"passed", report.passed()},
                 {"invariants", std::move(invariants)}};
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "verify: dominant weights (a,b) with a <= " << report.max_a << ", b <= " << report.max_b << "\n";
  std::size_t failed = 0;
  for (const InvariantTally& t : report.invariants) {
    os << (t.failures == 0 ? "PASS " : "FAIL ") << t.name << " [" << t.module << "] " << t.cases << " cases";
    if (t.failures != 0) {
      ++failed;
      os << ", " << t.failures << " failures; first: " << t.first_failure;
    }
    os << "\n";
  }
  if (failed == 0)
    os << "all " << report.invariants.size() << " invariants passed\n";
  else
    os << failed << " of " << report.invariants.size() << " invariants failed\n";
  return os.str();
}

}  // namespace g2
