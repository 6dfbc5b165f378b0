/*
 Copyright 2026 The wormgait Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "wormgait/serialization.hpp"

#include <cstdio>

namespace wormgait {

using nlohmann::json;

namespace {

json interval_json(const Interval& i) { return json::array({i.lo, i.hi}); }

double number_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::Config,
                std::string("profile segment needs numeric '") + key + "'");
  }
  return it->get<double>();
}

}  // namespace

json profile_to_json(const ForceProfile& profile) {
  json out = json::array();
  for (const Segment& seg : profile.segments()) {
    out.push_back({{"t_start", seg.t_begin},
                   {"t_end", seg.t_end},
                   {"kind", to_string(seg.kind)},
                   {"params", seg.params}});
  }
  return out;
}

ForceProfile profile_from_json(const json& doc) {
  const json& list = doc.is_object() && doc.contains("segments") ? doc["segments"] : doc;
  if (!list.is_array()) {
    throw Error(ErrorCode::Config, "profile document must be an array of segments");
  }
  std::vector<Segment> segments;
  segments.reserve(list.size());
  for (const json& item : list) {
    if (!item.is_object()) throw Error(ErrorCode::Config, "profile segment must be an object");
    Segment seg;
    seg.t_begin = number_field(item, "t_start");
    seg.t_end = number_field(item, "t_end");
    const auto kind = item.find("kind");
    if (kind == item.end() || !kind->is_string()) {
      throw Error(ErrorCode::Config, "profile segment needs a 'kind' string");
    }
    try {
      seg.kind = segment_kind_from_string(kind->get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::Config, e.what());
    }
    const auto params = item.find("params");
    if (params == item.end() || !params->is_array()) {
      throw Error(ErrorCode::Config, "profile segment needs a 'params' array");
    }
    for (const json& v : *params) {
      if (!v.is_number()) throw Error(ErrorCode::Config, "profile params must be numbers");
      seg.params.push_back(v.get<double>());
    }
    segments.push_back(std::move(seg));
  }
  try {
    return ForceProfile(std::move(segments));
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, std::string("invalid profile: ") + e.what());
  }
}

std::string profile_to_string(const ForceProfile& profile, int indent) {
  return profile_to_json(profile).dump(indent);
}

ForceProfile profile_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Config, std::string("profile JSON: ") + e.what());
  }
  return profile_from_json(doc);
}

json to_json(const FrictionParams& p) {
  return {{"f_fw", p.forward}, {"f_bw", p.backward}, {"f_0", p.breakaway},
          {"f_u", p.actuator_max}};
}

json to_json(const DerivedCoefficients& c) {
  return {{"alpha", c.alpha}, {"beta", c.beta}, {"rho", c.rho}, {"eta", c.eta}};
}

json to_json(const GaitSchedule& s) {
  return {{"T", s.period}, {"t1", s.start}, {"T1", s.T1}, {"T2", s.T2}, {"T3", s.T3}};
}

json to_json(const GaitDesign& d) {
  json out;
  out["schedule"] = to_json(d.schedule);
  out["u1"] = d.ic.u1;
  out["v1"] = d.ic.v1;
  out["gamma"] = d.ic.gamma;
  out["tmin_window"] = interval_json(d.ic.tmin);
  out["tmin"] = d.tmin;
  out["targets"] = {{"H_end", d.targets.H_end}, {"G_mid", d.targets.G_mid},
                    {"G_end", d.targets.G_end}, {"I_end", d.targets.I_end}};
  out["tau1"] = d.bang.params.tau1;
  out["tau2"] = d.bang.params.tau2;
  out["h"] = d.h;
  out["J"] = d.J;
  out["rhs"] = d.rhs;
  out["achievable_rhs"] = interval_json(d.hi.achievable);
  out["representative_rhs"] = d.hi.rhs;
  out["area_H"] = d.area_H;
  out["area_I"] = d.area_I;
  out["E_predicted"] = d.E_predicted;
  out["excursion_met"] = d.excursion_met;
  out["work"] = {{"W1", d.work.W1}, {"W2", d.work.W2}, {"W3", d.work.W3},
                 {"W_const", d.work.W_const}, {"W_total", d.work.W_total},
                 {"W_substituted", d.W_substituted}};
  out["X"] = d.dv.X;
  out["V"] = d.dv.V;
  out["P"] = d.P;
  out["P_u"] = d.P_u;
  out["P_u_realized"] = d.P_u_realized;
  return out;
}

json to_json(const CellResult& c) {
  return {{"T1r", c.T1r}, {"Tminr", c.tminr}, {"status", to_string(c.status)},
          {"T1", c.T1}, {"tmin", c.tmin}, {"u1", c.u1}, {"v1", c.v1},
          {"P_u", c.P_u}, {"V", c.V}, {"rhs", c.rhs},
          {"achievable_rhs", interval_json(c.achievable)},
          {"E_predicted", c.E_predicted}, {"excursion_met", c.excursion_met}};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace wormgait
