#include "qpa/serialize.hpp"

namespace qpa {

Json scalar_to_json(const Scalar& s) {
  Scalar r = s.reduced();
  Json j;
  j["conductor"] = r.conductor();
  Json coeffs = Json::array();
  for (const auto& c : r.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  return j;
}

Scalar scalar_from_json(const Json& j) {
  long n = j.at("conductor").get<long>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<long>(coeffs.size()) != euler_phi(n))
    fail(Errc::ParseError, "scalar coefficient count differs from phi(conductor)");
  Scalar out = Scalar::zero();
  long k = 0;
  for (const auto& c : coeffs) {
    Rational q(c.get<std::string>());
    q.canonicalize();
    out += Scalar(q) * Cyclotomic::root_power(n, k);
    ++k;
  }
  return out;
}

Json sparse_to_json(const SparseVec& v) {
  Json j = Json::array();
  for (const auto& [i, c] : v.terms) j.push_back(Json::array({i, scalar_to_json(c)}));
  return j;
}

SparseVec sparse_from_json(const Json& j) {
  SparseVec v;
  for (const auto& t : j) v += SparseVec::unit(t.at(0).get<int>(), scalar_from_json(t.at(1)));
  return v;
}

Json hopf_to_json(const HopfData& h) {
  Json j;
  j["type"] = "hopf_algebra";
  j["dim"] = h.dim;
  j["labels"] = h.labels;
  j["unit"] = sparse_to_json(h.unit);
  Json mult = Json::array();
  for (int i = 0; i < h.dim; ++i)
    for (int k = 0; k < h.dim; ++k)
      if (!h.mult[i][k].is_zero()) mult.push_back(Json::array({i, k, sparse_to_json(h.mult[i][k])}));
  j["mult"] = mult;
  Json com = Json::array();
  for (int i = 0; i < h.dim; ++i)
    for (const auto& t : h.comult[i])
      com.push_back(Json::array({i, t.left, t.right, scalar_to_json(t.c)}));
  j["comult"] = com;
  Json cu = Json::array();
  for (int i = 0; i < h.dim; ++i)
    if (!h.counit[i].is_zero()) cu.push_back(Json::array({i, scalar_to_json(h.counit[i])}));
  j["counit"] = cu;
  Json ant = Json::array();
  for (int i = 0; i < h.dim; ++i)
    if (!h.antipode[i].is_zero()) ant.push_back(Json::array({i, sparse_to_json(h.antipode[i])}));
  j["antipode"] = ant;
  return j;
}

HopfPtr hopf_from_json(const Json& j, bool verify) {
  if (j.value("type", "") != "hopf_algebra") fail(Errc::ParseError, "not a hopf_algebra document");
  auto h = std::make_shared<HopfData>();
  h->dim = j.at("dim").get<int>();
  h->labels = j.at("labels").get<std::vector<std::string>>();
  h->unit = sparse_from_json(j.at("unit"));
  h->mult.assign(h->dim, std::vector<SparseVec>(h->dim));
  for (const auto& t : j.at("mult"))
    h->mult[t.at(0).get<int>()][t.at(1).get<int>()] = sparse_from_json(t.at(2));
  h->comult.assign(h->dim, {});
  for (const auto& t : j.at("comult"))
    h->comult[t.at(0).get<int>()].push_back(
        {t.at(1).get<int>(), t.at(2).get<int>(), scalar_from_json(t.at(3))});
  h->counit.assign(h->dim, Scalar::zero());
  for (const auto& t : j.at("counit")) h->counit[t.at(0).get<int>()] = scalar_from_json(t.at(1));
  h->antipode.assign(h->dim, SparseVec{});
  for (const auto& t : j.at("antipode"))
    h->antipode[t.at(0).get<int>()] = sparse_from_json(t.at(1));
  if (verify) {
    HopfReport rep = verify_hopf(*h);
    if (!rep.all_axioms())
      fail(Errc::ParseError, "loaded algebra fails verification: " + rep.first_failure);
  }
  return h;
}

Json cert_to_json(const MagicCert& c) {
  Json j;
  j["type"] = "magic_certificate";
  j["size"] = c.size;
  j["parent"] = hopf_to_json(*c.parent);
  Json entries = Json::array();
  for (int i = 0; i < c.size; ++i)
    for (int k = 0; k < c.size; ++k)
      if (!c.entries[i][k].is_zero())
        entries.push_back(Json::array({i, k, sparse_to_json(c.entries[i][k])}));
  j["entries"] = entries;
  j["generated_dim"] = c.generated_dim;
  j["full"] = c.is_full_certificate;
  j["provenance"] = c.provenance;
  j["degree_bound_line"] = c.degree_bound_line;
  return j;
}

MagicCert cert_from_json(const Json& j, bool verify) {
  if (j.value("type", "") != "magic_certificate")
    fail(Errc::ParseError, "not a magic_certificate document");
  HopfPtr parent = hopf_from_json(j.at("parent"), verify);
  int n = j.at("size").get<int>();
  std::vector<std::vector<SparseVec>> entries(n, std::vector<SparseVec>(n));
  for (const auto& t : j.at("entries"))
    entries[t.at(0).get<int>()][t.at(1).get<int>()] = sparse_from_json(t.at(2));
  if (verify) {
    MagicCert c = verify_magic(parent, std::move(entries),
                               j.at("provenance").get<std::vector<std::string>>());
    c.degree_bound_line = j.value("degree_bound_line", "");
    if (c.generated_dim != j.at("generated_dim").get<int>())
      fail(Errc::ParseError, "stored generated_dim does not replay");
    return c;
  }
  MagicCert c;
  c.parent = parent;
  c.size = n;
  c.entries = std::move(entries);
  c.generated_dim = j.at("generated_dim").get<int>();
  c.is_full_certificate = j.at("full").get<bool>();
  c.provenance = j.at("provenance").get<std::vector<std::string>>();
  c.degree_bound_line = j.value("degree_bound_line", "");
  return c;
}

Json report_to_json(const HopfReport& r) {
  Json j;
  j["associative"] = r.associative;
  j["unital"] = r.unital;
  j["coassociative"] = r.coassociative;
  j["counital"] = r.counital;
  j["bialgebra"] = r.bialgebra;
  j["antipode_left"] = r.antipode_left;
  j["antipode_right"] = r.antipode_right;
  j["s_squared_identity"] = r.s_squared_identity;
  j["commutative"] = r.commutative;
  j["cocommutative"] = r.cocommutative;
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["type"] = "verdict";
  j["status"] = status_name(v.status);
  j["method"] = v.method;
  if (v.degree_bound) j["degree_bound"] = *v.degree_bound;
  if (!v.degree_derivation.empty()) j["degree_derivation"] = v.degree_derivation;
  if (v.certificate) j["certificate"] = cert_to_json(*v.certificate);
  if (!v.refutation_log.empty()) {
    Json log = Json::array();
    for (const auto& e : v.refutation_log) {
      Json entry;
      entry["assertion"] = e.assertion;
      entry["holds"] = e.holds;
      if (!e.witness.empty()) entry["witness"] = e.witness;
      log.push_back(entry);
    }
    j["refutation_log"] = log;
  }
  if (v.envelope) {
    Json env;
    env["dim"] = v.envelope->dim;
    env["description"] = v.envelope->description;
    env["cocommutative"] = v.envelope->cocommutative;
    env["grouplike_count"] = v.envelope->grouplike_count;
    Json basis = Json::array();
    for (const auto& b : v.envelope->basis) basis.push_back(sparse_to_json(b));
    env["basis"] = basis;
    j["envelope"] = env;
  }
  return j;
}

}  // namespace qpa
