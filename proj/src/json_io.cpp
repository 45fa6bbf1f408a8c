#include "torpoly/json_io.hpp"

namespace torpoly {

namespace {

ojson coords_json(const HalfIntVec& v) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(to_string(v.at(i)));
  return arr;
}

ojson tagged_weight(const char* kind, int n, const HalfIntVec& coords) {
  ojson j;
  j["kind"] = kind;
  j["n"] = n;
  j["coords"] = coords_json(coords);
  return j;
}

}  // namespace

ojson to_json(const HalfIntVec& v) { return coords_json(v); }

ojson weight_to_json(const WeightG& w) { return tagged_weight("G", w.rank(), w.coords()); }
ojson weight_to_json(const WeightK& w) { return tagged_weight("K", w.rank(), w.coords()); }
ojson weight_to_json(const WeightM& w) { return tagged_weight("M", w.rank(), w.coords()); }

ojson kostant_to_json(const std::vector<KostantDatum>& data) {
  ojson arr = ojson::array();
  for (const auto& d : data) {
    ojson j;
    j["lambda"] = to_string(d.lambda);
    j["sigma"] = coords_json(d.sigma.coords());
    j["length"] = d.length;
    arr.push_back(std::move(j));
  }
  return arr;
}

ojson ratpoly_to_json(const RatPoly& p) {
  ojson j;
  j["unit"] = unit_label(p.unit());
  ojson coeffs = ojson::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_string(p.coeff(i)));
  j["coeffs"] = coeffs;
  return j;
}

ojson tau_to_json(const HalfIntVec& tau) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const Rat v = tau.at(i);
    if (is_integer(v) && v.get_num().fits_slong_p())
      arr.push_back(v.get_num().get_si());
    else
      arr.push_back(to_string(v));
  }
  return arr;
}

ojson torsion_to_json(const TorsionPolynomial& p, const PlancherelConstant& c) {
  ojson j;
  j["n"] = p.n;
  j["tau"] = tau_to_json(p.tau);
  j["unit"] = unit_label(Unit::TwoPiCn);
  j["degree"] = p.degree();
  ojson coeffs = ojson::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_string(p.poly.coeff(i)));
  j["coeffs_ascending"] = coeffs;
  if (c.is_known())
    j["c_n_numeric"] = c.description();
  else
    j["c_n_numeric"] = nullptr;
  return j;
}

}  // namespace torpoly
