#include "imag/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

using nlohmann::json;

double number_at(const json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError("field '" + field + "': expected a number");
  return v.get<double>();
}

RealMatrix read_matrix(const json& doc, const char* key, int dim) {
  RealMatrix m = RealMatrix::Zero(dim, dim);
  if (!doc.contains(key)) return m;
  const json& rows = doc.at(key);
  const std::string field(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError("field '" + field + "': expected " + std::to_string(dim) +
                     " rows");
  }
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[i];
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("field '" + rf + "': expected " + std::to_string(dim) +
                       " entries");
    }
    for (int j = 0; j < dim; ++j) {
      m(i, j) = number_at(row[j], rf + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

RealVector read_vector(const json& doc, const char* key, int dim) {
  RealVector v = RealVector::Zero(dim);
  if (!doc.contains(key)) return v;
  const json& arr = doc.at(key);
  const std::string field(key);
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
    throw ParseError("field '" + field + "': expected " + std::to_string(dim) +
                     " entries");
  }
  for (int i = 0; i < dim; ++i) {
    v(i) = number_at(arr[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

ComplexMatrix read_complex_matrix(const json& doc, int dim) {
  const RealMatrix re = read_matrix(doc, "re", dim);
  const RealMatrix im = read_matrix(doc, "im", dim);
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(re(i, j), im(i, j));
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("channel spec '" + std::string(spec) + "': bad number '" +
                     std::string(text) + "'");
  }
  return v;
}

}  // namespace

LoadedState parse_state_json(std::string_view text) {
  const json doc = parse_json(text, "state");
  if (!doc.is_object()) throw ParseError("state: expected a JSON object");
  if (!doc.contains("re")) throw ParseError("state: missing field 're'");
  const json& re = doc.at("re");
  if (!re.is_array() || re.empty()) {
    throw ParseError("field 're': expected a nonempty array");
  }

  if (re[0].is_array()) {
    if (!doc.contains("dim")) throw ParseError("state: missing field 'dim'");
    if (!doc.at("dim").is_number_integer()) {
      throw ParseError("field 'dim': expected an integer");
    }
    const int dim = doc.at("dim").get<int>();
    if (dim < 1 || dim > kMaxDim) {
      throw ParseError("field 'dim': must be in [1, " + std::to_string(kMaxDim) +
                       "]");
    }
    return {DensityMatrix(read_complex_matrix(doc, dim)), false};
  }

  const int dim = static_cast<int>(re.size());
  if (dim > kMaxDim) throw ParseError("field 're': too many amplitudes");
  const RealVector vr = read_vector(doc, "re", dim);
  const RealVector vi = read_vector(doc, "im", dim);
  ComplexVector amps(dim);
  for (int i = 0; i < dim; ++i) amps(i) = Complex(vr(i), vi(i));
  return {PureState(amps).density(), true};
}

LoadedState load_state_file(const std::string& path) {
  try {
    return parse_state_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

KrausChannel parse_channel_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("channel spec '" + std::string(spec) +
                     "': expected <kind>:<param>=<value> or file:<path>");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);

  if (kind == "file") {
    const std::string path(rest);
    const json doc = parse_json(read_file(path), path);
    if (!doc.is_object() || !doc.contains("kraus") || !doc.at("kraus").is_array() ||
        doc.at("kraus").empty()) {
      throw ParseError(path + ": field 'kraus': expected a nonempty array");
    }
    std::vector<ComplexMatrix> ks;
    for (std::size_t i = 0; i < doc.at("kraus").size(); ++i) {
      const json& k = doc.at("kraus")[i];
      const std::string where = path + ": field 'kraus[" + std::to_string(i) + "]'";
      if (!k.is_object() || !k.contains("re") || !k.at("re").is_array()) {
        throw ParseError(where + ": expected an object with 're'");
      }
      const int dim = static_cast<int>(k.at("re").size());
      if (dim < 1 || dim > kMaxDim) throw ParseError(where + ": bad dimension");
      try {
        ks.push_back(read_complex_matrix(k, dim));
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
    KrausChannel ch(std::move(ks), "file:" + path);
    if (!validate_cptp(ch)) {
      std::ostringstream msg;
      msg << path << ": Kraus operators are not trace preserving (defect "
          << completeness_defect(ch) << ")";
      throw ValidationError(msg.str());
    }
    return ch;
  }

  ChannelKind ck;
  if (kind == "bf") {
    ck = ChannelKind::BitFlip;
  } else if (kind == "pd") {
    ck = ChannelKind::PhaseDamping;
  } else if (kind == "ad") {
    ck = ChannelKind::AmplitudeDamping;
  } else {
    throw ParseError("channel spec '" + std::string(spec) + "': unknown kind '" +
                     std::string(kind) + "'");
  }
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos || rest.substr(0, eq) != parameter_name(ck)) {
    throw ParseError("channel spec '" + std::string(spec) + "': expected " +
                     std::string(kind) + ":" + std::string(parameter_name(ck)) +
                     "=<value>");
  }
  return named_channel(ck, parse_number(rest.substr(eq + 1), spec));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace imag
