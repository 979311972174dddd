// Checkpoint file layout (line text, '\n' separated):
//
//   ccv1
//   max_n <N>
//   mode streaming
//   last_row <m>
//   fubini <count>
//   <count lines: f_{m,k} in base 16>
//   q <count>
//   <count lines: partial q_n in base 16, may be negative>
//   checksum <crc32 of every preceding byte, 8 hex digits>

#include <boost/crc.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pdc/engine.hpp"

namespace pdc {

namespace {

std::string crc_hex(std::string_view body) {
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return os.str();
}

const char* mode_name(EngineMode mode) {
  return mode == EngineMode::dense ? "dense" : "streaming";
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string next() {
    if (pos_ >= text_.size()) throw CheckpointError("checkpoint body ends early");
    const std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) throw CheckpointError("checkpoint line is unterminated");
    std::string line(text_.substr(pos_, eol - pos_));
    pos_ = eol + 1;
    return line;
  }

  std::string keyed(const std::string& key) {
    const std::string line = next();
    if (line.rfind(key + " ", 0) != 0) {
      throw CheckpointError("checkpoint expected '" + key + "' field");
    }
    return line.substr(key.size() + 1);
  }

  unsigned long keyed_number(const std::string& key) {
    const std::string v = keyed(key);
    try {
      std::size_t used = 0;
      const unsigned long r = std::stoul(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return r;
    } catch (const std::exception&) {
      throw CheckpointError("checkpoint field '" + key + "' is not a number");
    }
  }

  std::vector<ExactInt> values(const std::string& key) {
    const unsigned long count = keyed_number(key);
    std::vector<ExactInt> out;
    out.reserve(count);
    for (unsigned long i = 0; i < count; ++i) {
      ExactInt v;
      if (v.set_str(next(), 16) != 0) throw CheckpointError("checkpoint value is malformed");
      out.push_back(std::move(v));
    }
    return out;
  }

  bool at_end() const { return pos_ == text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void write_checkpoint(const StreamingState& state, const std::filesystem::path& path) {
  std::ostringstream body;
  body << kCheckpointMagic << '\n'
       << "max_n " << state.max_n << '\n'
       << "mode " << mode_name(state.mode) << '\n'
       << "last_row " << state.last_row << '\n'
       << "fubini " << state.fubini_row.size() << '\n';
  for (const ExactInt& v : state.fubini_row) body << v.get_str(16) << '\n';
  body << "q " << state.q.size() << '\n';
  for (const ExactInt& v : state.q) body << v.get_str(16) << '\n';
  const std::string text = body.str();

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot open checkpoint for writing: " + tmp.string());
    out << text << "checksum " << crc_hex(text) << '\n';
    out.flush();
    if (!out) throw CheckpointError("failed writing checkpoint: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

StreamingState read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  const std::size_t first_eol = text.find('\n');
  const std::string magic = text.substr(0, first_eol);
  if (magic != kCheckpointMagic) {
    if (magic.rfind("ccv", 0) == 0) {
      throw CheckpointError("unsupported checkpoint version '" + magic + "' (expected " +
                            kCheckpointMagic + ")");
    }
    throw CheckpointError("not a checkpoint file (missing " + std::string(kCheckpointMagic) +
                          " header)");
  }

  // The checksum line is the last line of the file.
  const std::string marker = "checksum ";
  const std::size_t at = text.rfind("\n" + marker);
  if (at == std::string::npos || text.back() != '\n') {
    throw CheckpointError("checkpoint checksum missing (file truncated?)");
  }
  const std::string_view body(text.data(), at + 1);
  const std::string stored = text.substr(at + 1 + marker.size(),
                                         text.size() - (at + 1 + marker.size()) - 1);
  if (stored != crc_hex(body)) throw CheckpointError("checkpoint checksum mismatch");

  LineReader reader(body);
  reader.next();  // magic
  StreamingState st;
  st.max_n = static_cast<unsigned>(reader.keyed_number("max_n"));
  const std::string mode = reader.keyed("mode");
  if (mode == "streaming") {
    st.mode = EngineMode::streaming;
  } else if (mode == "dense") {
    st.mode = EngineMode::dense;
  } else {
    throw CheckpointError("checkpoint mode '" + mode + "' is unknown");
  }
  st.last_row = static_cast<unsigned>(reader.keyed_number("last_row"));
  st.fubini_row = reader.values("fubini");
  st.q = reader.values("q");
  if (!reader.at_end()) throw CheckpointError("checkpoint has trailing data");
  return st;
}

}  // namespace pdc
