#pragma once

#include <adamsops/fgl.hpp>
#include <adamsops/hopfeval.hpp>
#include <adamsops/ivp.hpp>
#include <adamsops/json_io.hpp>
#include <adamsops/linalg.hpp>
#include <adamsops/opring.hpp>
#include <adamsops/parse.hpp>
#include <adamsops/rational.hpp>
#include <adamsops/split.hpp>
#include <adamsops/stirling.hpp>
#include <adamsops/verify.hpp>
