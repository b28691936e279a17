#include "modinv/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modinv {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

int int_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::uint32_t> uint_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
      fail(path + "[" + std::to_string(i) + "]",
           "expected a nonnegative integer");
    out.push_back(e.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

Json field_to_json(const FieldSpec& field) {
  return Json{{"p", field.p()}, {"s", field.s()}, {"modulus", field.modulus()}};
}

Json element_to_json(const FieldSpec& field, FieldCode a) {
  return Json(field.coeffs(a));
}

Json ring_to_json(const PolyRing& ring) {
  return Json{{"field", field_to_json(*ring.field())},
              {"vars", ring.var_names()}};
}

Json polynomial_to_json(const Polynomial& f) {
  const FieldSpec& field = *f.ring()->field();
  Json terms = Json::array();
  for (const Term& t : f.terms())
    terms.push_back(
        Json{{"exp", t.exp}, {"coeff", element_to_json(field, t.coeff)}});
  return Json{{"ring", ring_to_json(*f.ring())}, {"terms", std::move(terms)}};
}

Json group_to_json(const Group& group) {
  const FieldSpec& field = *group.ring()->field();
  int d = group.dim();
  Json gens = Json::array();
  for (const GroupElement& g : group.generators()) {
    Json rows = Json::array();
    for (int r = 0; r < d; ++r) {
      Json row = Json::array();
      for (int c = 0; c < d; ++c)
        row.push_back(element_to_json(field, g.matrix().at(r, c)));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  return Json{{"q", field_to_json(field)}, {"d", d},
              {"generators", std::move(gens)}};
}

Json fraction_to_json(const Fraction& u) {
  return Json{{"num", polynomial_to_json(u.num())},
              {"base", polynomial_to_json(u.base())},
              {"exp", u.exp()}};
}

FieldSpecPtr field_from_json(const Json& j, const std::string& path) {
  int p = int_at(member(j, path, "p"), path + ".p");
  int s = int_at(member(j, path, "s"), path + ".s");
  if (p < 2) fail(path + ".p", "expected a prime >= 2");
  if (s < 1) fail(path + ".s", "expected s >= 1");
  std::vector<std::uint32_t> modulus =
      uint_array(member(j, path, "modulus"), path + ".modulus");
  try {
    return FieldSpec::create(static_cast<std::uint32_t>(p),
                             static_cast<std::uint32_t>(s), std::move(modulus));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

FieldCode element_from_json(const FieldSpecPtr& field, const Json& j,
                            const std::string& path) {
  std::vector<std::uint32_t> coeffs = uint_array(j, path);
  if (coeffs.size() != field->s())
    fail(path, "expected " + std::to_string(field->s()) + " coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] >= field->p())
      fail(path + "[" + std::to_string(i) + "]", "coefficient out of range");
  return field->code_of(coeffs);
}

PolyRingPtr ring_from_json(const Json& j, const std::string& path) {
  FieldSpecPtr field = field_from_json(member(j, path, "field"), path + ".field");
  const Json& vars = member(j, path, "vars");
  if (!vars.is_array() || vars.empty()) fail(path + ".vars", "expected a nonempty array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string())
      fail(path + ".vars[" + std::to_string(i) + "]", "expected a string");
    names.push_back(vars[i].get<std::string>());
  }
  try {
    return PolyRing::create(std::move(field), std::move(names));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
  PolyRingPtr ring = ring_from_json(member(j, path, "ring"), path + ".ring");
  const Json& terms = member(j, path, "terms");
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  std::vector<Term> parsed;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string tpath = path + ".terms[" + std::to_string(i) + "]";
    const Json& exp = member(terms[i], tpath, "exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != ring->nvars())
      fail(tpath + ".exp", "expected " + std::to_string(ring->nvars()) +
                               " exponents");
    Exponents e;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      std::string epath = tpath + ".exp[" + std::to_string(k) + "]";
      int v = int_at(exp[k], epath);
      if (v < 0) fail(epath, "expected a nonnegative exponent");
      e.push_back(v);
    }
    FieldCode c = element_from_json(ring->field(), member(terms[i], tpath, "coeff"),
                                    tpath + ".coeff");
    parsed.push_back({std::move(e), c});
  }
  return Polynomial::from_terms(std::move(ring), std::move(parsed));
}

std::shared_ptr<const Group> group_from_json(const Json& j,
                                             const std::string& path) {
  FieldSpecPtr field = field_from_json(member(j, path, "q"), path + ".q");
  int d = int_at(member(j, path, "d"), path + ".d");
  if (d < 1) fail(path + ".d", "expected d >= 1");
  PolyRingPtr ring = PolyRing::create(field, d);
  const Json& gens = member(j, path, "generators");
  if (!gens.is_array()) fail(path + ".generators", "expected an array");
  std::vector<MatrixGF> mats;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::string gpath = path + ".generators[" + std::to_string(gi) + "]";
    const Json& rows = gens[gi];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
      fail(gpath, "expected " + std::to_string(d) + " rows");
    MatrixGF m(field, d, d);
    for (int r = 0; r < d; ++r) {
      std::string rpath = gpath + "[" + std::to_string(r) + "]";
      const Json& row = rows[r];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        fail(rpath, "expected " + std::to_string(d) + " entries");
      for (int c = 0; c < d; ++c)
        m.set(r, c, element_from_json(field, row[c],
                                      rpath + "[" + std::to_string(c) + "]"));
    }
    mats.push_back(std::move(m));
  }
  try {
    return std::make_shared<const Group>(Group::close(ring, std::move(mats)));
  } catch (const std::invalid_argument& e) {
    fail(path + ".generators", e.what());
  }
}

Fraction fraction_from_json(const Json& j, const std::string& path) {
  Polynomial num = polynomial_from_json(member(j, path, "num"), path + ".num");
  Polynomial base =
      polynomial_from_json(member(j, path, "base"), path + ".base");
  if (!num.ring()->same_ring(*base.ring()))
    fail(path, "num and base live in different rings");
  int exp = int_at(member(j, path, "exp"), path + ".exp");
  if (exp < 0) fail(path + ".exp", "expected exp >= 0");
  try {
    return Fraction(std::move(num), std::move(base), exp);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace modinv
