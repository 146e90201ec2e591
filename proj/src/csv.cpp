#include "tendonsim/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "tendonsim/errors.hpp"

namespace tendonsim {

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 9);
  if (ec != std::errc{}) {
    throw NumericError("failed to format value");
  }
  return std::string(buffer, end);
}

std::string render_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!stream) {
      throw IoError("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                  ec.message());
  }
}

CsvTable csv_from_sweep(const SweepResult& sweep) {
  CsvTable table;
  table.header.push_back("displacement_mm");
  for (const auto& series : sweep.series) {
    table.header.push_back(std::string(to_string(series.kind)) + "_force");
  }
  for (std::size_t row = 0; row < sweep.displacement.size(); ++row) {
    std::vector<double> values;
    values.reserve(1 + sweep.series.size());
    values.push_back(sweep.displacement[row]);
    for (const auto& series : sweep.series) {
      values.push_back(series.force[row]);
    }
    table.rows.push_back(std::move(values));
  }
  return table;
}

CsvTable csv_from_torque_curve(const TorqueCurve& curve) {
  CsvTable table;
  table.header.push_back("angle_rad");
  if (curve.series.size() == 1) {
    table.header.push_back("torque");
  } else {
    for (const auto& series : curve.series) {
      table.header.push_back(series.label + "_torque");
    }
  }
  for (std::size_t row = 0; row < curve.angle.size(); ++row) {
    std::vector<double> values;
    values.reserve(1 + curve.series.size());
    values.push_back(curve.angle[row]);
    for (const auto& series : curve.series) {
      values.push_back(series.torque[row]);
    }
    table.rows.push_back(std::move(values));
  }
  return table;
}

CsvTable csv_from_screw_home(const std::vector<ScrewHomeTrajectory>& trials) {
  CsvTable table;
  table.header = {"trial", "pitch_rad", "yaw_rad"};
  for (std::size_t trial = 0; trial < trials.size(); ++trial) {
    for (const auto& row : trials[trial].rows) {
      table.rows.push_back({static_cast<double>(trial), row.pitch, row.yaw});
    }
  }
  return table;
}

CsvTable csv_from_slip(const SphereSlipReport& report) {
  CsvTable table;
  table.header = {"phi_rad",     "length_mm",   "tangent_a_x", "tangent_a_y",
                  "tangent_a_z", "tangent_b_x", "tangent_b_y", "tangent_b_z"};
  for (const auto& sample : report.profile) {
    table.rows.push_back({sample.phi, sample.length, sample.tangent_a.x, sample.tangent_a.y,
                          sample.tangent_a.z, sample.tangent_b.x, sample.tangent_b.y,
                          sample.tangent_b.z});
  }
  return table;
}

}  // namespace tendonsim
