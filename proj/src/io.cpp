#include "addsys/io.hpp"

#include <sstream>

namespace addsys::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("document is missing \"") + key + "\"");
  return j.at(key);
}

Int integer(const Json& j) {
  if (!j.is_number_integer()) throw InputError("expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw OverflowError("integer does not fit in 64 bits");
  return j.get<Int>();
}

std::vector<Int> integers(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(integer(x));
  return out;
}

std::vector<ComponentSet> sets(const Json& j) {
  if (!j.is_array()) throw InputError("\"parts\" must be an array of arrays");
  std::vector<ComponentSet> out;
  for (const auto& p : j) out.emplace_back(integers(p));
  return out;
}

Json parts_json(const std::vector<ComponentSet>& parts) {
  Json arr = Json::array();
  for (const auto& p : parts) arr.push_back(p.elements());
  return arr;
}

void csv_line(std::ostringstream& out, const Int* row, Int n) {
  for (Int i = 0; i < n; ++i) {
    if (i) out << ',';
    out << row[i];
  }
  out << '\n';
}

}  // namespace

std::string canonical(const Json& j) { return j.dump(); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const SumSystem& ss) { return Json{{"dims", ss.dims()}, {"parts", parts_json(ss.parts())}}; }

SumSystem sumsystem_from_json(const Json& j) {
  SumSystem ss(sets(field(j, "parts")));
  if (integers(field(j, "dims")) != ss.dims()) throw InputError("\"dims\" does not match the part cardinalities");
  return ss;
}

Json to_json(const SdsSystem& s) { return Json{{"flavour", to_string(s.flavour())}, {"parts", parts_json(s.parts())}}; }

SdsSystem sds_from_json(const Json& j) {
  const auto& f = field(j, "flavour");
  if (!f.is_string()) throw InputError("\"flavour\" must be a string");
  return SdsSystem(parse_flavour(f.get<std::string>()), sets(field(j, "parts")));
}

Json to_json(const Cuboid& c) { return Json{{"dims", c.dims()}, {"entries", c.entries()}}; }

Cuboid cuboid_from_json(const Json& j) { return Cuboid(integers(field(j, "dims")), integers(field(j, "entries"))); }

Json to_json(const SquareMatrix& m) { return Json{{"entries", m.plain()}, {"n", m.n()}}; }

SquareMatrix square_from_json(const Json& j) {
  const auto& e = field(j, "entries");
  if (!e.is_array()) throw InputError("\"entries\" must be an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : e) rows.push_back(integers(r));
  if (j.contains("n") && integer(j.at("n")) != static_cast<Int>(rows.size()))
    throw InputError("\"n\" does not match the number of rows");
  return SquareMatrix::from_plain(rows);
}

Json to_json(const VerificationReport& r) {
  Json j{{"passed", r.passed}};
  if (r.violated) j["violated"] = *r.violated;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const Jof& jof) { return Json{{"dims", jof.dims}, {"jof", format_jof(jof)}}; }

std::string to_csv(const Cuboid& c) {
  std::ostringstream out;
  const auto& dims = c.dims();
  const Int width = dims[0];
  const Int height = dims.size() > 1 ? dims[1] : 1;
  const Int slice = width * height;
  const Int slices = static_cast<Int>(c.size()) / slice;
  // Storage has k3 fastest among the remaining indices; slices are emitted
  // lexicographically, k3 most significant.
  std::vector<Int> rest(dims.begin() + std::min<std::size_t>(2, dims.size()), dims.end());
  for (Int s = 0; s < slices; ++s) {
    Int rem = s, storage = 0, stride = 1;
    std::vector<Int> digits(rest.size());
    for (std::size_t i = rest.size(); i-- > 0;) {
      digits[i] = rem % rest[i];
      rem /= rest[i];
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      storage += digits[i] * stride;
      stride *= rest[i];
    }
    if (s) out << '\n';
    const Int* base = c.entries().data() + storage * slice;
    for (Int r = 0; r < height; ++r) csv_line(out, base + r * width, width);
  }
  return out.str();
}

std::string to_csv(const SquareMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m.plain()) csv_line(out, row.data(), static_cast<Int>(row.size()));
  return out.str();
}

}  // namespace addsys::io
