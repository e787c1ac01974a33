#include "netpot/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "netpot/errors.hpp"

namespace netpot {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Digon: return "Digon";
    case CaseLabel::Star: return "Star";
    case CaseLabel::CompleteBipartite: return "CompleteBipartite";
    case CaseLabel::BipartiteDRG_D3: return "BipartiteDRG_D3";
    case CaseLabel::QSD_D3D4: return "QSD_D3D4";
    case CaseLabel::OutOfBounds: return "OutOfBounds";
  }
  return "?";
}

CaseLabel classify_case(const BiregularArray& a) {
  if (a.D0 > 3 || a.D1 > 4) return CaseLabel::OutOfBounds;
  if (a.D0 == 1 && a.D1 == 1) return CaseLabel::Digon;
  if (a.D0 == 1 && a.D1 == 2) return CaseLabel::Star;
  if (a.D0 == 2 && a.D1 == 2) return CaseLabel::CompleteBipartite;
  if (a.D0 == 3 && a.D1 == 3) return CaseLabel::BipartiteDRG_D3;
  return CaseLabel::QSD_D3D4;  // D0 = 3, D1 = 4
}

void check_qsd_params(const QsdParams& p) {
  if (p.r < 1 || p.k < 1 || p.lambda < 1 || p.y < 1)
    throw InconsistentParams("parameters must be positive");
  if (p.r <= p.lambda) throw InconsistentParams("r > lambda violated");
  if ((p.y - 1) * (p.r - 1) != (p.k - 1) * (p.lambda - 1))
    throw InconsistentParams("(y-1)(r-1) = (k-1)(lambda-1) violated");
  if ((p.k * p.lambda) % p.y != 0) throw InconsistentParams("y | k*lambda violated");
  if (!(0 < p.y && p.y < p.k)) throw InconsistentParams("0 < y < k violated");
}

bool qsd_m_condition(const QsdParams& p) {
  check_qsd_params(p);
  Integer k = p.k, r = p.r, lambda = p.lambda;
  Integer lhs = (k - 1) * (r - lambda) * ((k + r) * (k + r) - lambda * k);
  Integer rhs = k * k * lambda * lambda;
  return lhs <= rhs;
}

BiregularArray build_case5_array(const QsdParams& p) {
  check_qsd_params(p);
  BiregularArray a;
  a.D0 = 3;
  a.D1 = 4;
  a.k0 = p.r;
  a.k1 = p.k;
  a.c0 = {1, p.lambda, p.k};
  a.c1 = {1, p.y, p.k * p.lambda / p.y, p.k};
  return a;
}

bool bipartite_drg_d3_m(long long k, long long mu) {
  if (k < 2 || mu < 1 || mu > k - 1)
    throw ParamOutOfRange("need 1 <= mu <= k-1 with k >= 2");
  return Rational(4 * k, 5) <= mu;  // upper bound mu <= k-1 holds by precondition
}

namespace {

struct SideSequence {
  std::vector<long long> c;
  Integer n;  // ball size when the sequence terminates
};

// All parity-consistent single-side c-sequences for given (k_side, k_other)
// with integral sphere sizes, D <= max_D and total ball size <= max_n.
std::vector<SideSequence> enumerate_side(long long k_side, long long k_other, int max_D,
                                         long long max_n) {
  std::vector<SideSequence> out;
  std::vector<long long> c;

  // Walks distance i -> i+1 carrying the sphere size and ball size.
  auto recurse = [&](auto&& self, int i, Integer sphere, Integer ball, long long b_prev) -> void {
    if (i > max_D) return;
    long long valency = (i % 2 == 0) ? k_side : k_other;
    for (long long ci = (i == 1 ? 1 : 1); ci <= valency; ++ci) {
      if (i == 1 && ci != 1) break;  // c_{l,1} = 1
      Integer next_num = sphere * b_prev;
      if (next_num % ci != 0) continue;  // sphere size must stay integral
      Integer next_sphere = next_num / ci;
      if (next_sphere <= 0) continue;
      Integer next_ball = ball + next_sphere;
      if (next_ball > max_n) continue;
      long long bi = valency - ci;
      c.push_back(ci);
      if (bi == 0) {
        out.push_back({c, next_ball});  // sequence terminates here: D = i
      } else {
        self(self, i + 1, next_sphere, next_ball, bi);
      }
      c.pop_back();
    }
  };
  recurse(recurse, 1, Integer(1), Integer(1), k_side);
  return out;
}

}  // namespace

std::vector<SearchHit> search_arrays(const SearchBounds& bounds) {
  std::vector<SearchHit> hits;

  // Canonical labeling (w.l.o.g. in the underlying graph): k0 >= k1 and
  // D0 <= D1; validate re-checks the diameter relation.
  for (long long k0 = 1; k0 <= bounds.max_k; ++k0) {
    for (long long k1 = 1; k1 <= k0; ++k1) {
      auto side0 = enumerate_side(k0, k1, bounds.max_D, bounds.max_n);
      auto side1 = enumerate_side(k1, k0, bounds.max_D, bounds.max_n);

      std::map<Integer, std::vector<const SideSequence*>> side1_by_n;
      for (const auto& s : side1) side1_by_n[s.n].push_back(&s);

      for (const auto& s0 : side0) {
        auto it = side1_by_n.find(s0.n);
        if (it == side1_by_n.end()) continue;
        for (const SideSequence* s1 : it->second) {
          int D0 = static_cast<int>(s0.c.size());
          int D1 = static_cast<int>(s1->c.size());
          if (D0 > D1) continue;
          BiregularArray a{D0, D1, k0, k1, s0.c, s1->c};
          if (!validate(a).passed) continue;
          SearchHit hit;
          hit.array = a;
          hit.n = s0.n;
          hit.m_property = m_property_array(a);
          hit.label = classify_case(a);
          if (hit.label == CaseLabel::BipartiteDRG_D3) {
            // Non-antipodal incidence graphs of square designs additionally
            // need k - mu to be a square; observed, never enforced.
            long long mu = a.c(0, 2);
            if (mu < a.k0 - 1) {
              long long gap = a.k0 - mu;
              long long root = static_cast<long long>(std::sqrt(static_cast<double>(gap)));
              while (root * root < gap) ++root;
              while (root * root > gap) --root;
              if (root * root != gap)
                hit.notes.push_back("k - mu = " + std::to_string(gap) +
                                    " is not a square (non-antipodal realizability)");
            }
          }
          hits.push_back(std::move(hit));
        }
      }
    }
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    auto key = [](const SearchHit& h) {
      return std::tuple(h.n, h.array.k0, h.array.k1, h.array.D0, h.array.D1, h.array.c0,
                        h.array.c1);
    };
    return key(x) < key(y);
  });
  return hits;
}

}  // namespace netpot
