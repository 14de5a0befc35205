#include "qpa/magic.hpp"

#include <sstream>

namespace qpa {

MagicCert verify_magic(HopfPtr h, std::vector<std::vector<SparseVec>> entries,
                       std::vector<std::string> provenance) {
  int n = static_cast<int>(entries.size());
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::PreconditionViolated, "certificate matrix is not square");
  const HopfData& H = *h;
  auto residual = [&](const SparseVec& v) { return H.describe(v); };
  for (int i = 0; i < n; ++i) {
    SparseVec rowsum, colsum;
    for (int j = 0; j < n; ++j) {
      rowsum += entries[i][j];
      colsum += entries[j][i];
      for (int k = 0; k < n; ++k) {
        SparseVec p = H.multiply(entries[i][j], entries[i][k]);
        SparseVec expect = (j == k) ? entries[i][j] : SparseVec{};
        if (!(p == expect))
          fail(Errc::RelationFailure, "u_ij u_ik != d_jk u_ij at (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) +
                                          "), residual " + residual(p - expect));
        SparseVec q = H.multiply(entries[j][i], entries[k][i]);
        expect = (j == k) ? entries[j][i] : SparseVec{};
        if (!(q == expect))
          fail(Errc::RelationFailure, "u_ji u_ki != d_jk u_ji at (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) +
                                          "), residual " + residual(q - expect));
      }
    }
    if (!(rowsum == H.unit))
      fail(Errc::RelationFailure,
           "row sum " + std::to_string(i) + " differs from 1 by " + residual(rowsum - H.unit));
    if (!(colsum == H.unit))
      fail(Errc::RelationFailure,
           "column sum " + std::to_string(i) + " differs from 1 by " + residual(colsum - H.unit));
  }
  // comultiplication, counit and antipode patterns
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 l = H.comult_of(entries[i][j]);
      Tensor2 r;
      for (int k = 0; k < n; ++k)
        for (const auto& [a, ca] : entries[i][k].terms)
          for (const auto& [b2, cb] : entries[k][j].terms) {
            auto key = std::make_pair(a, b2);
            auto it = r.find(key);
            if (it == r.end())
              r.emplace(key, ca * cb);
            else {
              it->second += ca * cb;
              if (it->second.is_zero()) r.erase(it);
            }
          }
      for (auto it = l.begin(); it != l.end();)
        it = it->second.is_zero() ? l.erase(it) : std::next(it);
      if (!(l == r))
        fail(Errc::RelationFailure, "Delta(u_ij) != sum_k u_ik (x) u_kj at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
      Scalar eps = H.counit_of(entries[i][j]);
      if (!(eps == (i == j ? Scalar::one() : Scalar::zero())))
        fail(Errc::RelationFailure,
             "eps(u_ij) != d_ij at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(H.apply_antipode(entries[i][j]) == entries[j][i]))
        fail(Errc::RelationFailure,
             "S(u_ij) != u_ji at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  MagicCert cert;
  cert.parent = h;
  cert.size = n;
  cert.entries = std::move(entries);
  std::vector<SparseVec> seed;
  for (const auto& row : cert.entries)
    for (const auto& e : row) seed.push_back(e);
  cert.generated_dim = static_cast<int>(subalgebra_span_growth(H, seed).size());
  cert.is_full_certificate = (cert.generated_dim == H.dim);
  cert.provenance = std::move(provenance);
  return cert;
}

MagicCert cayley_magic(const FunctionAlgebra& fun) {
  int n = static_cast<int>(fun.G.order());
  std::vector<std::vector<SparseVec>> entries(n, std::vector<SparseVec>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      entries[g][h] =
          SparseVec::unit(fun.G.index_of(fun.G.element(g).inverse() * fun.G.element(h)));
  auto cert = verify_magic(fun.H, std::move(entries), {"cayley(k^G), degree |G| = " +
                                                       std::to_string(n)});
  if (!cert.is_full_certificate) fail(Errc::GenerationFailure, "Cayley matrix must generate k^G");
  return cert;
}

MagicCert fourier_magic(const GroupAlgebra& grp, const Perm& g) {
  if (!grp.G.contains(g)) fail(Errc::PreconditionViolated, "element not in the group");
  int n = g.order();
  Rational inv_n(1, n);
  std::vector<int> powers;  // indices of g^k
  Perm p = Perm::identity(g.degree());
  for (int k = 0; k < n; ++k) {
    powers.push_back(grp.G.index_of(p));
    p = p * g;
  }
  std::vector<std::vector<SparseVec>> entries(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, Scalar>> terms;
      for (int k = 0; k < n; ++k)
        terms.emplace_back(powers[k],
                           Cyclotomic::root_power(n, k * (j - i)) * Cyclotomic(inv_n));
      std::sort(terms.begin(), terms.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVec v;
      for (auto& t : terms)
        if (!t.second.is_zero()) v.terms.push_back(std::move(t));
      entries[i][j] = std::move(v);
    }
  return verify_magic(grp.H, std::move(entries),
                      {"fourier(" + g.cycle_string() + "), order " + std::to_string(n)});
}

MagicCert block_compose(const std::vector<MagicCert>& certs) {
  if (certs.empty()) fail(Errc::PreconditionViolated, "no blocks");
  HopfPtr h = certs[0].parent;
  for (const auto& c : certs)
    if (c.parent != h) fail(Errc::PreconditionViolated, "blocks live over different parents");
  int total = 0;
  for (const auto& c : certs) total += c.size;
  std::vector<std::vector<SparseVec>> entries(total, std::vector<SparseVec>(total));
  int off = 0;
  std::vector<std::string> prov;
  for (const auto& c : certs) {
    for (int i = 0; i < c.size; ++i)
      for (int j = 0; j < c.size; ++j) entries[off + i][off + j] = c.entries[i][j];
    off += c.size;
    for (const auto& p : c.provenance) prov.push_back("block: " + p);
  }
  return verify_magic(h, std::move(entries), std::move(prov));
}

MagicCert map_certificate(const MagicCert& cert, const HopfMap& f) {
  if (cert.parent != f.source) fail(Errc::PreconditionViolated, "certificate/map source mismatch");
  if (rank_of(f.matrix) != f.source->dim)
    fail(Errc::PreconditionViolated, "certificate transport needs an injective map");
  std::vector<std::vector<SparseVec>> entries(cert.size, std::vector<SparseVec>(cert.size));
  for (int i = 0; i < cert.size; ++i)
    for (int j = 0; j < cert.size; ++j) entries[i][j] = f.apply(cert.entries[i][j]);
  std::vector<std::string> prov = cert.provenance;
  prov.push_back("transported through an embedding");
  return verify_magic(f.target, std::move(entries), std::move(prov));
}

MagicCert double_magic(const DrinfeldDouble& d, const MagicCert& cert_group_algebra,
                       const MagicCert& cert_function_algebra) {
  MagicCert a = map_certificate(cert_group_algebra, d.embed_grp);
  MagicCert b = map_certificate(cert_function_algebra, d.embed_fun);
  MagicCert out = block_compose({a, b});
  if (!out.is_full_certificate)
    fail(Errc::GenerationFailure, "double certificate generated only dimension " +
                                      std::to_string(out.generated_dim));
  std::ostringstream line;
  line << "degree " << out.size << " = " << cert_group_algebra.size << " + "
       << cert_function_algebra.size << " <= |G|(1 + |G|) = " << d.n() * (1 + d.n());
  out.degree_bound_line = line.str();
  return out;
}

MagicCert coideal_certificate(const CoidealSub& l, long exponent_bound,
                              const std::string& provenance) {
  CoefficientMatrix cm = coefficient_matrix(l, exponent_bound);
  return verify_magic(l.parent, cm.entries,
                      {provenance + ", dim " + std::to_string(cm.size)});
}

}  // namespace qpa
