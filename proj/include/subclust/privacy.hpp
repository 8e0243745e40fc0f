#ifndef SUBCLUST_PRIVACY_HPP
#define SUBCLUST_PRIVACY_HPP

#include <utility>

namespace subclust {

/// (eps, delta) of a differentially private mechanism. eps may be +infinity
/// for the non-private sentinel accepted throughout the library.
struct PrivacySpec {
  double eps = 0.0;
  double delta = 0.0;
};

/// Privacy of the subsampled wrapper around an (eps, delta) mechanism.
struct AmplifiedPrivacy {
  double eps_prime = 0.0;
  double delta_prime = 0.0;
  double xi = 0.0;
};

struct GroupPrivacyResult {
  int g = 0;
  int threshold = 0;
  double xi = 0.0;
  double eps_group = 0.0;    // threshold * eps_prime
  double delta_group = 0.0;  // P[Bin(g, xi) > threshold]
};

/// Privacy amplification by subsampling:
///   eps'   = ln max{ xi(e^eps - 1) + 1, (xi(e^-eps - 1) + 1)^-1 }
///   delta' = max{ e^-eps * delta * xi / (xi(e^-eps - 1) + 1), delta * xi }
/// Both branches are 1 + O(xi) for small xi, so the evaluation goes through
/// expm1/log1p to keep nine significant digits at xi = 1e-3.
AmplifiedPrivacy amplify(const PrivacySpec& spec, double xi);

/// Exact binomial upper tail P[Bin(g, xi) > threshold]. Rational arithmetic
/// for g <= 64, log-space floating summation above.
double group_privacy_delta(double xi, int g, int threshold);

/// Group privacy of the subsampled wrapper: (T * eps', delta_{T,xi,g}) for
/// groups of size g.
GroupPrivacyResult group_privacy_guarantee(const AmplifiedPrivacy& amplified, int g,
                                           int threshold);

/// Baseline (g * eps, 0) group privacy of a pure-DP mechanism.
std::pair<double, double> naive_group_privacy(const PrivacySpec& spec, int g);

}  // namespace subclust

#endif  // SUBCLUST_PRIVACY_HPP
