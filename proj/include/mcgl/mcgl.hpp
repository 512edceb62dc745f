#pragma once

#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/poly.hpp"
#include "mcgl/mat.hpp"
#include "mcgl/normal_forms.hpp"
#include "mcgl/class_analyzer.hpp"
#include "mcgl/witness.hpp"
#include "mcgl/stable.hpp"
#include "mcgl/oracle.hpp"
#include "mcgl/json_io.hpp"
