#pragma once

#include <cstddef>
#include <vector>

namespace vdeblur {

// A single image plane stack: row-major, channel-interleaved samples with
// normalized intensities in [0, 1]. Index layout is (y * width + x) * channels + c.
struct Frame {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<float> data;

  Frame() = default;
  Frame(int width, int height, int channels, float fill = 0.0f);

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  float at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
  float& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  std::size_t sample_count() const { return pixel_count() * channels; }
  bool same_shape(const Frame& other) const {
    return width == other.width && height == other.height && channels == other.channels;
  }
};

// Throws ShapeError / ValueError when an invariant is violated: positive
// dimensions, channels in {1,3}, data length, every sample in [0,1] and finite.
void validate_frame(const Frame& frame);

// Throws ShapeError unless both frames share width/height/channels.
void require_same_shape(const Frame& a, const Frame& b, const char* context);

// Rec.601 luma (0.299 R + 0.587 G + 0.114 B). Single-channel input is
// returned unchanged.
Frame to_luma(const Frame& frame);

// An odd-length run of frames around a center index, the per-stage unit of
// work for the cascade.
struct SequenceWindow {
  std::vector<Frame> frames;
  int center_index = 0;

  int radius() const { return (static_cast<int>(frames.size()) - 1) / 2; }
};

// Validates window invariants: odd length, matching shapes, center in range.
SequenceWindow make_window(std::vector<Frame> frames, int center_index);

}  // namespace vdeblur
