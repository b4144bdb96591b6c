#pragma once

// Braces on an abelian group H assembled from a smaller brace B, an injective
// morphism sigma: (B,.) -> Aut(H,+) and a surjective morphism h: (H,+) -> (B,+)
// with h(sigma(g)(m)) = lambda_g(h(m)); the product is x.y = x + sigma(h(x))(y).

#include <optional>
#include <vector>

#include "braces/brace.hpp"

namespace braces {

struct ExtensionData {
  AbelianGroup H;
  Brace B;
  /// sigma[g] for each element index g of B
  std::vector<Automorphism> sigma;
  /// h[m] = element index of B, for each element index m of H
  std::vector<int> h;
};

/// Checks, exhaustively and in this order: sigma injective, sigma
/// multiplicative, h additive, h surjective, compatibility. The witness holds
/// element indices (of B for sigma failures, of H for h failures, (g, m) for
/// compatibility). Throws ShapeError on mismatched sizes or shapes.
VerifyReport check_extension_data(const ExtensionData& d);

/// The brace on H. Also checks Soc = ker h, lambda_u = sigma(h(u)), and that
/// H/Soc is isomorphic to B; throws BraceError if the datum or a check fails.
Brace build_extension(const ExtensionData& d);

/// First F in Aut(H) enumeration order with
/// sigma2(h2(m)) = F^-1 o sigma(h(F m)) o F for all m. The returned F is
/// checked to be a brace isomorphism from the brace of d2 to that of d.
std::optional<Automorphism> sigma_h_equivalent(const ExtensionData& d, const ExtensionData& d2);

/// The datum (G/Soc, lambda, natural map) of a brace G: sigma(q) = lambda_r
/// for a representative r of the coset q. Representatives default to the
/// smallest coset element; representatives[q] may name any element of q.
ExtensionData extension_from_brace(const Brace& G);
ExtensionData extension_from_brace(const Brace& G, const std::vector<int>& representatives);

/// Datum over the trivial brace on Z/p: sigma(k) = A^k, h = row vector.
ExtensionData cyclic_extension(const AbelianGroup& H, const Automorphism& A, const std::vector<std::int64_t>& row);

}  // namespace braces
