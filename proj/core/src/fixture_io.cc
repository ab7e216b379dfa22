// Copyright 2026 The streetnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "streetnav/fixture_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "streetnav/world.h"

namespace streetnav {

namespace {

using nlohmann::json;

// Carries a JSON path out of the recursive readers.
struct SchemaError : std::runtime_error {
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(absl::StrCat(path, ": ", what)) {}
};

const json& Field(const json& obj, const std::string& path,
                  const char* key) {
  if (!obj.is_object()) throw SchemaError(path, "expected object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(absl::StrCat(path, ".", key), "missing field");
  }
  return *it;
}

const json* OptionalField(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string ReadString(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected string");
  return v.get<std::string>();
}

double ReadNumber(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected number");
  return v.get<double>();
}

int ReadInt(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected integer");
  return v.get<int>();
}

const json& ReadArray(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected array");
  return v;
}

std::optional<std::string> ReadOptionalString(const json& obj,
                                              const std::string& path,
                                              const char* key) {
  const json* v = OptionalField(obj, key);
  if (v == nullptr) return std::nullopt;
  return ReadString(*v, absl::StrCat(path, ".", key));
}

GeoPoint ReadPoint(double lat, double lng, const std::string& path) {
  auto p = GeoPoint::Create(lat, lng);
  if (!p.ok()) throw SchemaError(path, std::string(p.status().message()));
  return *p;
}

GeoPoint ReadLatLngObject(const json& obj, const std::string& path) {
  return ReadPoint(ReadNumber(Field(obj, path, "lat"), path + ".lat"),
                   ReadNumber(Field(obj, path, "lng"), path + ".lng"), path);
}

YearMonth ReadYearMonth(const json& v, const std::string& path) {
  const std::string s = ReadString(v, path);
  YearMonth ym;
  char dash = 0;
  int consumed = 0;
  if (s.size() != 7 ||
      std::sscanf(s.c_str(), "%4d%c%2d%n", &ym.year, &dash, &ym.month,
                  &consumed) != 3 ||
      dash != '-' || consumed != 7 || ym.month < 1 || ym.month > 12) {
    throw SchemaError(path, "expected \"YYYY-MM\"");
  }
  return ym;
}

StreetAddress ReadAddress(const json& obj, const std::string& path) {
  StreetAddress a;
  a.street_number = ReadOptionalString(obj, path, "street_number");
  a.road_name = ReadString(Field(obj, path, "road_name"), path + ".road_name");
  a.neighborhood = ReadOptionalString(obj, path, "neighborhood");
  a.city = ReadString(Field(obj, path, "city"), path + ".city");
  a.state_province = ReadOptionalString(obj, path, "state_province");
  a.country = ReadString(Field(obj, path, "country"), path + ".country");
  return a;
}

Panorama ReadPano(const json& obj, const std::string& path) {
  Panorama p;
  p.id = ReadString(Field(obj, path, "id"), path + ".id");
  p.location = ReadLatLngObject(obj, path);
  const json& links = ReadArray(Field(obj, path, "links"), path + ".links");
  for (size_t i = 0; i < links.size(); ++i) {
    const std::string lp = absl::StrCat(path, ".links[", i, "]");
    PanoLink link;
    link.target_id = ReadString(Field(links[i], lp, "target"), lp + ".target");
    link.heading =
        Heading(ReadNumber(Field(links[i], lp, "heading"), lp + ".heading"));
    if (const json* d = OptionalField(links[i], "description")) {
      link.description = ReadString(*d, lp + ".description");
    }
    p.links.push_back(std::move(link));
  }
  p.address = ReadAddress(Field(obj, path, "address"), path + ".address");
  p.capture_date =
      ReadYearMonth(Field(obj, path, "capture_date"), path + ".capture_date");
  p.photographer = ReadOptionalString(obj, path, "photographer");
  return p;
}

Place ReadPlace(const json& obj, const std::string& path) {
  Place p;
  p.id = ReadString(Field(obj, path, "id"), path + ".id");
  p.display_name = ReadString(Field(obj, path, "name"), path + ".name");
  p.place_type = ReadString(Field(obj, path, "type"), path + ".type");
  p.location = ReadLatLngObject(obj, path);
  p.editorial_summary = ReadOptionalString(obj, path, "summary");
  return p;
}

Road ReadRoad(const json& obj, const std::string& path) {
  Road r;
  r.name = ReadString(Field(obj, path, "name"), path + ".name");
  const json& geom =
      ReadArray(Field(obj, path, "geometry"), path + ".geometry");
  for (size_t i = 0; i < geom.size(); ++i) {
    const std::string gp = absl::StrCat(path, ".geometry[", i, "]");
    const json& pair = ReadArray(geom[i], gp);
    if (pair.size() != 2) throw SchemaError(gp, "expected [lat, lng]");
    r.geometry.push_back(ReadPoint(ReadNumber(pair[0], gp + "[0]"),
                                   ReadNumber(pair[1], gp + "[1]"), gp));
  }
  return r;
}

OctantViews ReadViews(const json& v, const std::string& path) {
  const json& arr = ReadArray(v, path);
  if (arr.size() != 8) throw SchemaError(path, "expected 8 octant views");
  OctantViews views;
  for (size_t o = 0; o < 8; ++o) {
    const std::string vp = absl::StrCat(path, "[", o, "]");
    views[o].image_ref = ReadString(Field(arr[o], vp, "image"), vp + ".image");
    const json& tags = ReadArray(Field(arr[o], vp, "tags"), vp + ".tags");
    for (size_t t = 0; t < tags.size(); ++t) {
      views[o].tags.push_back(
          ReadString(tags[t], absl::StrCat(vp, ".tags[", t, "]")));
    }
  }
  return views;
}

WorldFixture ReadFixture(const json& doc) {
  WorldFixture f;
  const std::string root = "$";
  const json& meta = Field(doc, root, "meta");
  f.meta.schema_version =
      ReadInt(Field(meta, "$.meta", "schema_version"), "$.meta.schema_version");
  if (const json* name = OptionalField(meta, "name")) {
    f.meta.name = ReadString(*name, "$.meta.name");
  }
  const json& panos = ReadArray(Field(doc, root, "panos"), "$.panos");
  for (size_t i = 0; i < panos.size(); ++i) {
    f.panos.push_back(ReadPano(panos[i], absl::StrCat("$.panos[", i, "]")));
  }
  const json& places = ReadArray(Field(doc, root, "places"), "$.places");
  for (size_t i = 0; i < places.size(); ++i) {
    f.places.push_back(
        ReadPlace(places[i], absl::StrCat("$.places[", i, "]")));
  }
  const json& roads = ReadArray(Field(doc, root, "roads"), "$.roads");
  for (size_t i = 0; i < roads.size(); ++i) {
    f.roads.push_back(ReadRoad(roads[i], absl::StrCat("$.roads[", i, "]")));
  }
  const json& imagery = Field(doc, root, "imagery");
  if (!imagery.is_object()) throw SchemaError("$.imagery", "expected object");
  for (auto it = imagery.begin(); it != imagery.end(); ++it) {
    f.imagery.emplace(it.key(),
                      ReadViews(it.value(), absl::StrCat("$.imagery.", it.key())));
  }
  return f;
}

json WriteAddress(const StreetAddress& a) {
  json j = json::object();
  if (a.street_number) j["street_number"] = *a.street_number;
  j["road_name"] = a.road_name;
  if (a.neighborhood) j["neighborhood"] = *a.neighborhood;
  j["city"] = a.city;
  if (a.state_province) j["state_province"] = *a.state_province;
  j["country"] = a.country;
  return j;
}

}  // namespace

absl::StatusOr<WorldFixture> ParseFixture(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError("$: malformed JSON");
  }
  WorldFixture fixture;
  try {
    fixture = ReadFixture(doc);
  } catch (const SchemaError& e) {
    return absl::InvalidArgumentError(e.what());
  }
  if (fixture.meta.schema_version != kFixtureSchemaVersion) {
    return absl::InvalidArgumentError(absl::StrCat(
        "$.meta.schema_version: unsupported version ",
        fixture.meta.schema_version));
  }
  FillDefaultImagery(fixture);
  if (auto s = ValidateFixture(fixture); !s.ok()) return s;
  return fixture;
}

absl::StatusOr<WorldFixture> LoadFixture(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseFixture(buffer.str());
}

absl::StatusOr<WorldFixture> LoadFixtureFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return LoadFixture(in);
}

std::string SerializeFixture(const WorldFixture& fixture) {
  json doc = json::object();
  doc["meta"] = {{"schema_version", fixture.meta.schema_version},
                 {"name", fixture.meta.name}};
  json panos = json::array();
  for (const Panorama& p : fixture.panos) {
    json jp = json::object();
    jp["id"] = p.id;
    jp["lat"] = p.location.lat;
    jp["lng"] = p.location.lng;
    json links = json::array();
    for (const PanoLink& l : p.links) {
      links.push_back({{"target", l.target_id},
                       {"heading", l.heading.degrees()},
                       {"description", l.description}});
    }
    jp["links"] = std::move(links);
    jp["address"] = WriteAddress(p.address);
    jp["capture_date"] = absl::StrFormat("%04d-%02d", p.capture_date.year,
                                         p.capture_date.month);
    if (p.photographer) jp["photographer"] = *p.photographer;
    panos.push_back(std::move(jp));
  }
  doc["panos"] = std::move(panos);
  json places = json::array();
  for (const Place& p : fixture.places) {
    json jp = {{"id", p.id},
               {"name", p.display_name},
               {"type", p.place_type},
               {"lat", p.location.lat},
               {"lng", p.location.lng}};
    if (p.editorial_summary) jp["summary"] = *p.editorial_summary;
    places.push_back(std::move(jp));
  }
  doc["places"] = std::move(places);
  json roads = json::array();
  for (const Road& r : fixture.roads) {
    json geom = json::array();
    for (const GeoPoint& g : r.geometry) geom.push_back({g.lat, g.lng});
    roads.push_back({{"name", r.name}, {"geometry", std::move(geom)}});
  }
  doc["roads"] = std::move(roads);
  json imagery = json::object();
  for (const auto& [id, views] : fixture.imagery) {
    json arr = json::array();
    for (const ViewDescriptor& v : views) {
      arr.push_back({{"image", v.image_ref}, {"tags", v.tags}});
    }
    imagery[id] = std::move(arr);
  }
  doc["imagery"] = std::move(imagery);
  return doc.dump(2);
}

}  // namespace streetnav
