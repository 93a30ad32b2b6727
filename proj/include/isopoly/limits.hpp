#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace isopoly {

/// Raised when an enumeration would exceed its configured dimension cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration caps. Everything here is a guard against accidental
/// factorial blowups, not a tuning knob.
struct Limits {
  int psi_cap = 8;               // psi_n_max (n! diagonal vertices)
  int psi_nn_cap = 6;            // psi_nn_max outer enumeration
  int face_cap = 6;              // verify_face, (n!)^2 ordered pairs
  int cloud_cap = 5;             // psi_vertices / phi_vertices
  int adjacency_point_cap = 24;  // graph_complete all-pairs LP

  /// ISOPOLY_MAX_N, when set, replaces every n-based cap above
  /// (the point-count cap for adjacency is left alone).
  static Limits from_env() {
    Limits lim;
    if (const char* s = std::getenv("ISOPOLY_MAX_N")) {
      const int v = std::stoi(std::string(s));
      if (v < 1) throw std::invalid_argument("ISOPOLY_MAX_N must be >= 1");
      lim.psi_cap = lim.psi_nn_cap = lim.face_cap = lim.cloud_cap = v;
    }
    return lim;
  }
};

inline void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
}

}  // namespace isopoly
