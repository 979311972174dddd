#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "pdc/results.hpp"

namespace pdc {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

ExactInt parse_field(const std::string& text, std::size_t line_no) {
  try {
    return parse_exact(text);
  } catch (const std::invalid_argument&) {
    throw ResultsParseError("line " + std::to_string(line_no) + ": bad integer '" + text + "'");
  }
}

void check_digits(const ResultRow& row) {
  if (digit_count(row.p) != row.digit_count) {
    throw ResultsParseError("n=" + std::to_string(row.n) + ": digit_count " +
                            std::to_string(row.digit_count) + " disagrees with p");
  }
}

std::vector<ResultRow> read_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ResultsParseError(std::string("invalid JSON results: ") + e.what());
  }
  if (!doc.contains("records") || !doc["records"].is_array()) {
    throw ResultsParseError("JSON results lack a 'records' array");
  }
  std::vector<ResultRow> rows;
  try {
    for (const auto& rec : doc["records"]) {
      ResultRow row;
      row.n = rec.at("n").get<unsigned>();
      row.p = parse_exact(rec.at("p").get<std::string>());
      row.digit_count = rec.at("digit_count").get<std::size_t>();
      if (rec.contains("q")) row.q = parse_exact(rec.at("q").get<std::string>());
      check_digits(row);
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ResultsParseError(std::string("malformed JSON record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ResultsParseError(std::string("malformed JSON record: ") + e.what());
  }
  return rows;
}

}  // namespace

void write_results(std::ostream& out, const std::vector<SequenceRecord>& records,
                   const ResultsOptions& options) {
  if (options.format == ResultsFormat::json) {
    nlohmann::ordered_json doc;
    if (options.timestamp) doc["generated"] = *options.timestamp;
    doc["records"] = nlohmann::ordered_json::array();
    for (const SequenceRecord& r : records) {
      nlohmann::ordered_json rec;
      rec["n"] = r.n;
      rec["p"] = to_string(r.p);
      rec["digit_count"] = r.digit_count;
      if (options.emit_q) rec["q"] = to_string(r.q);
      doc["records"].push_back(std::move(rec));
    }
    out << doc.dump(1) << '\n';
    return;
  }
  if (options.timestamp) out << "# generated " << *options.timestamp << '\n';
  for (const SequenceRecord& r : records) {
    out << r.n << '\t' << to_string(r.p) << '\t' << r.digit_count;
    if (options.emit_q) out << '\t' << to_string(r.q);
    out << '\n';
  }
}

std::vector<ResultRow> read_results(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return read_json(text);

  std::vector<ResultRow> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 3 && fields.size() != 4) {
      throw ResultsParseError("line " + std::to_string(line_no) + ": expected 3 or 4 fields");
    }
    ResultRow row;
    const ExactInt n = parse_field(fields[0], line_no);
    const ExactInt digits = parse_field(fields[2], line_no);
    if (sgn(n) < 0 || !n.fits_uint_p() || sgn(digits) < 0 || !digits.fits_ulong_p()) {
      throw ResultsParseError("line " + std::to_string(line_no) + ": index out of range");
    }
    row.n = static_cast<unsigned>(n.get_ui());
    row.p = parse_field(fields[1], line_no);
    row.digit_count = digits.get_ui();
    if (fields.size() == 4) row.q = parse_field(fields[3], line_no);
    check_digits(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pdc
