#include "clt/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clt {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_int(long long v) { return std::to_string(v); }

namespace {
std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key=value");
    cfg.kv_[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const {
  return kv_.count(key) != 0;
}

std::string KeyValueConfig::get(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw std::runtime_error("missing config key: " + key);
  return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key,
                                   const std::string& dflt) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? dflt : it->second;
}

double KeyValueConfig::get_double(const std::string& key) const {
  return std::stod(get(key));
}

long long KeyValueConfig::get_int(const std::string& key) const {
  return std::stoll(get(key));
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

void KeyValueConfig::set_double(const std::string& key, double value) {
  kv_[key] = fmt17(value);
}

void KeyValueConfig::set_int(const std::string& key, long long value) {
  kv_[key] = fmt_int(value);
}

std::string KeyValueConfig::to_text() const {
  std::ostringstream os;
  for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
  return os.str();
}

void KeyValueConfig::write_file(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write config file: " + path);
  f << to_text();
}

struct CsvWriter::Impl {
  std::ofstream out;
};

CsvWriter::CsvWriter(std::string path) : impl_(new Impl) {
  impl_->out.open(path);
  if (!impl_->out) {
    delete impl_;
    throw std::runtime_error("cannot open output file: " + path);
  }
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::comment(const std::string& text) {
  impl_->out << "# " << text << "\n";
}

void CsvWriter::header(const std::vector<std::string>& cols) {
  row(cols);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) impl_->out << ',';
    impl_->out << cells[i];
  }
  impl_->out << "\n";
}

}  // namespace clt
