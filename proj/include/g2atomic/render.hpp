#pragma once

// Human-readable and machine-readable output. Text and LaTeX list terms in
// display order (expanded weight first, then descending height) and write
// polynomials in descending powers of q: "2q^4 + q^3 + q^2".

#include <string>
#include <string_view>

#include "g2atomic/combo.hpp"
#include "g2atomic/polyq.hpp"

namespace g2 {

struct SweepReport;

enum class OutputFormat { Text, Json, Latex };

/// "text", "json" or "latex"; throws DomainError otherwise.
OutputFormat parse_format(std::string_view name);

/// Text or LaTeX rendering of p; the zero polynomial renders as "0".
std::string render_poly(const LaurentPoly& p, OutputFormat format);

/// Basis element symbol, e.g. "N(2,4)", "Hbar(0,1)", "\mathbf{N}_{(2,4)}".
std::string render_element(BasisLabel basis, Weight w, OutputFormat format);

/// "<lhs> = <rhs>" where lhs is the element (lhs_basis, lam) and rhs is x.
/// JSON renders expansion_to_json(x, lam). Output ends in a newline.
std::string render_expansion(BasisLabel lhs_basis, Weight lam, const Combination& x, OutputFormat format);

/// K_{lam,mu}(q). Text prints the bare polynomial.
std::string render_kostka(Weight lam, Weight mu, const LaurentPoly& k, OutputFormat format);

/// One line per invariant; LaTeX falls back to text.
std::string render_sweep(const SweepReport& report, OutputFormat format);

}  // namespace g2
