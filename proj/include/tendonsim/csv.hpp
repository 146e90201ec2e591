#ifndef TENDONSIM_CSV_HPP
#define TENDONSIM_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "tendonsim/joint.hpp"
#include "tendonsim/structures.hpp"
#include "tendonsim/wrapping.hpp"

namespace tendonsim {

// Rectangular numeric table. Rendered with a header row, '\n' line endings,
// '.' decimal point and 9 significant digits (UTF-8 throughout).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Locale-independent rendering of one value at 9 significant digits.
std::string format_double(double value);

std::string render_csv(const CsvTable& table);

// Writes content to path via a temporary file in the same directory renamed
// on completion, so readers never observe a partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// displacement_mm,<kind>_force per swept structure kind.
CsvTable csv_from_sweep(const SweepResult& sweep);

// angle_rad,torque for a single series, angle_rad,<label>_torque otherwise.
CsvTable csv_from_torque_curve(const TorqueCurve& curve);

// trial,pitch_rad,yaw_rad over all trials (trial column 0..n-1).
CsvTable csv_from_screw_home(const std::vector<ScrewHomeTrajectory>& trials);

// phi_rad,length_mm plus the 3D wrap contact coordinates per sampled plane.
CsvTable csv_from_slip(const SphereSlipReport& report);

}  // namespace tendonsim

#endif  // TENDONSIM_CSV_HPP
