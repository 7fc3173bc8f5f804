#include "toricmult/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

namespace toricmult {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  LatticeVector v;
  Bits tight;  // processed rows vanishing on v
};

LatticeVector combine(const Integer& s, const LatticeVector& a, const Integer& t, const LatticeVector& b) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] - t * b[i];
  return primitive(r).first;
}

}  // namespace

ConeGenerators cone_from_inequalities(std::size_t dim, const std::vector<LatticeVector>& rows) {
  const std::size_t m = rows.size();
  for (const auto& a : rows)
    if (a.size() != dim) throw Error("inequality of wrong length");

  std::vector<LatticeVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = rows[k];
    if (a.is_zero()) {
      for (auto& r : rays) r.tight.set(k);
      continue;
    }

    std::size_t li = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) {
        li = i;
        break;
      }

    if (li != lineality.size()) {
      // The row cuts the lineality space: one lineality direction becomes a ray.
      LatticeVector l0 = lineality[li];
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = -l0;
        s0 = -s0;
      }
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto& l : lineality) {
        Integer s = dot(a, l);
        if (s != 0) l = combine(s0, l, s, l0);
      }
      for (auto& r : rays) {
        Integer s = dot(a, r.v);
        if (s != 0) r.v = combine(s0, r.v, s, l0);
        r.tight.set(k);
      }
      Bits t(m);
      for (std::size_t j = 0; j < k; ++j) t.set(j);
      rays.push_back({std::move(l0), std::move(t)});
      continue;
    }

    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].v);
      if (s[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (s[i] < 0) {
        neg.push_back(i);
      } else {
        next.push_back(rays[i]);
        next.back().tight.set(k);
      }
    }

    const std::size_t pointed_dim = dim - lineality.size();
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        // s[p] > 0 > s[q]; the combination vanishes on row k.
        Ray nr{combine(s[p], rays[q].v, s[q], rays[p].v), common};
        nr.tight.set(k);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace toricmult
