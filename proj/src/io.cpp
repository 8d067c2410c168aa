#include "gframe/io.hpp"

#include <fstream>
#include <sstream>

#include "gframe/error.hpp"

namespace gframe {

namespace {

using nlohmann::json;

std::size_t positive_integer(const json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key)) fail(ErrorCode::Parse, where + ": missing \"" + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    fail(ErrorCode::Parse, where + ": \"" + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

// Reads a rows x cols nested array into the real or imaginary parts of out.
void read_block(const json& block, std::size_t rows, std::size_t cols, bool imaginary,
                std::vector<Complex>& out, const std::string& where) {
  if (!block.is_array() || block.size() != rows) {
    fail(ErrorCode::Parse, where + " must be an array of " + std::to_string(rows) + " rows");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = block[r];
    if (!row.is_array() || row.size() != cols) {
      fail(ErrorCode::Parse, where + " row " + std::to_string(r) + " must hold " +
                                 std::to_string(cols) + " numbers");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        fail(ErrorCode::Parse, where + " row " + std::to_string(r) + " has a non-numeric entry");
      }
      const double v = row[c].get<double>();
      auto& slot = out[r * cols + c];
      slot = imaginary ? Complex(slot.real(), v) : Complex(v, slot.imag());
    }
  }
}

}  // namespace

GFrame frame_from_json(const json& doc) {
  if (!doc.is_object()) fail(ErrorCode::Parse, "frame document must be a JSON object");
  const std::size_t n = positive_integer(doc, "dim_h", "frame");
  if (!doc.contains("operators") || !doc.at("operators").is_array() ||
      doc.at("operators").empty()) {
    fail(ErrorCode::Parse, "frame: \"operators\" must be a non-empty array");
  }

  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < doc.at("operators").size(); ++i) {
    const auto& entry = doc.at("operators")[i];
    const std::string where = "operator " + std::to_string(i);
    if (!entry.is_object()) fail(ErrorCode::Parse, where + " must be an object");
    const std::size_t k = positive_integer(entry, "rows", where);
    if (!entry.contains("re")) fail(ErrorCode::Parse, where + ": missing \"re\"");

    std::vector<Complex> values(k * n);
    read_block(entry.at("re"), k, n, false, values, where + " \"re\"");
    if (entry.contains("im")) read_block(entry.at("im"), k, n, true, values, where + " \"im\"");
    if (!all_finite(values)) fail(ErrorCode::Parse, where + " has non-finite entries");
    ops.emplace_back(k, n, std::move(values));
  }
  return GFrame(n, std::move(ops));
}

json frame_to_json(const GFrame& f) {
  json ops = json::array();
  for (const auto& op : f.operators()) {
    json re = json::array();
    json im = json::array();
    bool has_imaginary = false;
    for (std::size_t r = 0; r < op.rows(); ++r) {
      json re_row = json::array();
      json im_row = json::array();
      for (std::size_t c = 0; c < op.cols(); ++c) {
        re_row.push_back(op(r, c).real());
        im_row.push_back(op(r, c).imag());
        has_imaginary = has_imaginary || op(r, c).imag() != 0.0;
      }
      re.push_back(std::move(re_row));
      im.push_back(std::move(im_row));
    }
    json entry = {{"rows", op.rows()}, {"re", std::move(re)}};
    if (has_imaginary) entry["im"] = std::move(im);
    ops.push_back(std::move(entry));
  }
  return json{{"dim_h", f.dim()}, {"operators", std::move(ops)}};
}

GFrame parse_frame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  return frame_from_json(doc);
}

std::string dump_frame(const GFrame& f) { return frame_to_json(f).dump(); }

GFrame load_frame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_frame(buffer.str());
}

void save_frame(const GFrame& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  out << dump_frame(f) << '\n';
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace gframe
