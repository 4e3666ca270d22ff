"""Read and write 8-bit grayscale images (PGM P2/P5 and PNG)."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import numpy as np

from .enhancement import GrayImage


_UMASK = os.umask(0)
os.umask(_UMASK)


class ImageFormatError(ValueError):
    pass


def _pgm_tokens(data: bytes, count: int, path) -> tuple[list[bytes], int]:
    """Pull ``count`` whitespace-separated header tokens, skipping # comments.

    Returns the tokens and the offset just past the last token.
    """
    tokens = []
    i = 0
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i : i + 1].isspace():
            i += 1
        if i >= n:
            raise ImageFormatError(f"{path}: truncated PGM header")
        if data[i : i + 1] == b"#":
            while i < n and data[i : i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        j = i
        while j < n and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
            j += 1
        tokens.append(data[i:j])
        i = j
    return tokens, i


def _read_pgm(data: bytes, path) -> GrayImage:
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise ImageFormatError(f"{path}: unsupported PNM variant {magic!r} (need P2 or P5)")
    (w, h, maxval), end = _pgm_tokens(data[2:], 3, path)
    end += 2
    try:
        width, height, maxval = int(w), int(h), int(maxval)
    except ValueError:
        raise ImageFormatError(f"{path}: malformed PGM header") from None
    if width < 1 or height < 1:
        raise ImageFormatError(f"{path}: invalid PGM size {width}x{height}")
    if maxval != 255:
        raise ImageFormatError(f"{path}: maxval must be 255, got {maxval}")
    n = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        if end >= len(data) or not data[end : end + 1].isspace():
            raise ImageFormatError(f"{path}: truncated data, expected {n} bytes, got 0")
        raster = data[end + 1 : end + 1 + n]
        if len(raster) < n:
            raise ImageFormatError(
                f"{path}: truncated data, expected {n} bytes, got {len(raster)}"
            )
        pixels = np.frombuffer(raster, dtype=np.uint8)
    else:
        body = data[end:]
        body = b"\n".join(line.split(b"#", 1)[0] for line in body.splitlines())
        fields = body.split()
        if len(fields) < n:
            raise ImageFormatError(
                f"{path}: truncated data, expected {n} values, got {len(fields)}"
            )
        try:
            pixels = np.array([int(v) for v in fields[:n]], dtype=np.int64)
        except ValueError:
            raise ImageFormatError(f"{path}: non-integer sample in P2 raster") from None
        if pixels.min() < 0 or pixels.max() > 255:
            raise ImageFormatError(f"{path}: sample outside [0, 255]")
    return GrayImage(width, height, pixels.reshape(height, width))


def rgb_to_luma(rgb: np.ndarray) -> np.ndarray:
    """Rec.601 luma round(0.299 R + 0.587 G + 0.114 B), exact in integers."""
    rgb = rgb.astype(np.int64)
    acc = 299 * rgb[..., 0] + 587 * rgb[..., 1] + 114 * rgb[..., 2]
    return ((acc + 500) // 1000).astype(np.uint8)


def _read_png(path, luma: bool) -> GrayImage:
    from PIL import Image

    try:
        with Image.open(path) as im:
            im.load()
            mode = im.mode
            arr = np.asarray(im)
    except OSError as exc:
        raise ImageFormatError(f"{path}: unreadable PNG ({exc})") from exc
    if mode == "L":
        return GrayImage.from_array(arr)
    if mode == "RGB":
        if not luma:
            raise ImageFormatError(f"{path}: RGB PNG requires luma conversion to be enabled")
        return GrayImage.from_array(rgb_to_luma(arr))
    raise ImageFormatError(f"{path}: unsupported PNG mode {mode!r} (need 8-bit L or RGB)")


def read_image(path, luma: bool = True) -> GrayImage:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise ImageFormatError(f"{path}: cannot read ({exc.strerror})") from exc
    if data[:8] == b"\x89PNG\r\n\x1a\n":
        return _read_png(path, luma)
    if data[:1] == b"P":
        return _read_pgm(data, path)
    raise ImageFormatError(f"{path}: unsupported format (expected PGM or PNG)")


def encode_pgm(img: GrayImage) -> bytes:
    return b"P5\n%d %d\n255\n" % (img.width, img.height) + img.data.tobytes()


def encode_png(img: GrayImage) -> bytes:
    import io

    from PIL import Image

    buf = io.BytesIO()
    Image.fromarray(np.ascontiguousarray(img.data)).save(buf, format="PNG")
    return buf.getvalue()


def atomic_write(path, payload: bytes | str) -> None:
    """Write via a sibling temp file and rename, so ``path`` is never partial."""
    path = Path(path)
    if isinstance(payload, str):
        payload = payload.encode("utf-8")
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(payload)
        os.chmod(tmp, 0o666 & ~_UMASK)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_image(img: GrayImage, path) -> None:
    """Format by extension: .pgm -> binary P5, .png -> 8-bit grayscale PNG."""
    path = Path(path)
    ext = path.suffix.lower()
    if ext == ".pgm":
        payload = encode_pgm(img)
    elif ext == ".png":
        payload = encode_png(img)
    else:
        raise ImageFormatError(f"{path}: unsupported output extension {ext!r} (use .pgm or .png)")
    try:
        atomic_write(path, payload)
    except OSError as exc:
        raise OSError(f"{path}: cannot write ({exc.strerror or exc})") from exc
