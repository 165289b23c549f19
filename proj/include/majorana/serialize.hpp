#pragma once

#include <iosfwd>
#include <string>

#include "majorana/fields.hpp"
#include "majorana/hankel.hpp"

namespace majorana {

// Text format shared by every tool: one line of JSON header, then one row per
// value. Grid fields write "i j k c0 c1 c2 c3", mode fields "ip l mu c0 c1 c2 c3".
// Doubles are written with 17 significant digits, so a round trip is exact.

struct StoredField {
    MajoranaSpinorField field;
    MassParam mass;
};

struct StoredModes {
    MajoranaModeField modes;
    MassParam mass;
};

void write_field(std::ostream& os, const MajoranaSpinorField& f, const MassParam& mass);
StoredField read_field(std::istream& is);

void write_modes(std::ostream& os, const MajoranaModeField& m, const MassParam& mass);
StoredModes read_modes(std::istream& is);

void save_field(const std::string& path, const MajoranaSpinorField& f, const MassParam& mass);
StoredField load_field(const std::string& path);
void save_modes(const std::string& path, const MajoranaModeField& m, const MassParam& mass);
StoredModes load_modes(const std::string& path);

}  // namespace majorana
