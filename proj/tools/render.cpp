#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace headorder::cli {

namespace {

bool scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

bool matrix(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.empty() && scalar_array(x); });
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += " ";
    s += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
  }
  return s + "]";
}

void emit(std::ostringstream& out, const Json& j, int indent);

void emit_value(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_primitive()) {
    out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else if (scalar_array(v)) {
    out << ' ' << inline_array(v) << '\n';
  } else if (matrix(v)) {
    out << '\n';
    for (const Json& row : v) out << pad << "  " << inline_array(row) << '\n';
  } else {
    out << '\n';
    emit(out, v, indent + 2);
  }
}

void emit(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      out << pad << k << ':';
      emit_value(out, v, indent);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << '-' << (j[i].is_object() ? "\n" : "");
      if (j[i].is_object()) {
        emit(out, j[i], indent + 2);
      } else {
        emit_value(out, j[i], indent);
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

}  // namespace

std::string render_pretty(const Json& report) {
  std::ostringstream out;
  emit(out, report, 0);
  return out.str();
}

}  // namespace headorder::cli
