#include "sphplanks/report.hpp"

#include <cstdio>

namespace sphplanks {

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::Volume: return "volume";
    case Quantity::MeanWidth: return "mean_width";
    case Quantity::Uf: return "uf";
    case Quantity::MeasureSj: return "measure_Sj";
    case Quantity::SjAverage: return "Sj_average";
    case Quantity::Exact: return "exact";
  }
  return "unknown";
}

Digest& Digest::add(const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h_ ^= p[i];
    h_ *= 0x100000001b3ULL;
  }
  return *this;
}

Digest& Digest::add(const Eigen::MatrixXd& m) {
  add(static_cast<std::uint64_t>(m.rows()));
  add(static_cast<std::uint64_t>(m.cols()));
  return add(m.data(), sizeof(double) * static_cast<std::size_t>(m.size()));
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

}  // namespace sphplanks
