#pragma once

#include "yinyang/circle_set.hpp"
#include "yinyang/curves.hpp"
#include "yinyang/geometry.hpp"
#include "yinyang/json_io.hpp"
#include "yinyang/quadrature.hpp"
#include "yinyang/renderer.hpp"
#include "yinyang/verifier.hpp"
#include "yinyang/version.hpp"
