#include "vdeblur/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vdeblur/errors.hpp"

namespace vdeblur {

Frame::Frame(int width_, int height_, int channels_, float fill)
    : width(width_), height(height_), channels(channels_) {
  if (width < 1 || height < 1) {
    throw ShapeError("frame dimensions must be at least 1x1, got " + std::to_string(width_) +
                     "x" + std::to_string(height_));
  }
  if (channels != 1 && channels != 3) {
    throw ShapeError("frame channel count must be 1 or 3, got " + std::to_string(channels_));
  }
  data.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

void validate_frame(const Frame& frame) {
  if (frame.width < 1 || frame.height < 1) {
    throw ShapeError("frame dimensions must be at least 1x1");
  }
  if (frame.channels != 1 && frame.channels != 3) {
    throw ShapeError("frame channel count must be 1 or 3");
  }
  if (frame.data.size() != frame.sample_count()) {
    throw ShapeError("frame data length does not match width*height*channels");
  }
  for (float s : frame.data) {
    if (!std::isfinite(s) || s < 0.0f || s > 1.0f) {
      throw ValueError("frame sample outside [0,1]");
    }
  }
}

void require_same_shape(const Frame& a, const Frame& b, const char* context) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(context) + ": frame shapes differ (" + std::to_string(a.width) +
                     "x" + std::to_string(a.height) + "x" + std::to_string(a.channels) + " vs " +
                     std::to_string(b.width) + "x" + std::to_string(b.height) + "x" +
                     std::to_string(b.channels) + ")");
  }
}

Frame to_luma(const Frame& frame) {
  if (frame.channels == 1) {
    return frame;
  }
  if (frame.channels != 3) {
    throw ShapeError("to_luma expects 1 or 3 channels");
  }
  Frame out(frame.width, frame.height, 1);
  const float* src = frame.data.data();
  float* dst = out.data.data();
  const std::size_t n = frame.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double l = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
    dst[i] = static_cast<float>(std::clamp(l, 0.0, 1.0));
  }
  return out;
}

SequenceWindow make_window(std::vector<Frame> frames, int center_index) {
  if (frames.empty() || frames.size() % 2 == 0) {
    throw SequenceError("sequence window must have odd length, got " +
                        std::to_string(frames.size()));
  }
  if (center_index < 0 || center_index >= static_cast<int>(frames.size())) {
    throw SequenceError("window center index out of range");
  }
  for (std::size_t i = 1; i < frames.size(); ++i) {
    require_same_shape(frames[0], frames[i], "make_window");
  }
  return SequenceWindow{std::move(frames), center_index};
}

}  // namespace vdeblur
