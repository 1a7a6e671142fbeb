"""Report exporters: JSON, CSV, SVG and TikZ."""
