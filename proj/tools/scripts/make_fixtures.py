#!/usr/bin/env python3
"""Regenerates the bundled image corpus and the mini message dataset.

The outputs are committed; this script documents how they were produced.
Source photographs come from the scikit-image sample data directory.
"""
import json
import os
import pathlib

import numpy as np
import skimage.io as skio
from skimage.color import rgb2gray
from skimage.util import img_as_ubyte
from scipy.ndimage import gaussian_filter, median_filter

ROOT = pathlib.Path(__file__).resolve().parents[2] / "data"
SK = pathlib.Path(skio.__file__).resolve().parents[1] / "data"

CROP = 288

# (file, top, left) for each 288x288 pristine crop
PRISTINE = [
    ("astronaut.png", 0, 0), ("astronaut.png", 60, 150),
    ("camera.png", 40, 100), ("camera.png", 220, 220),
    ("coffee.png", 50, 40), ("coffee.png", 100, 300),
    ("chelsea.png", 10, 20), ("chelsea.png", 10, 160),
    ("rocket.jpg", 100, 0), ("rocket.jpg", 120, 340),
    ("motorcycle_left.png", 100, 60), ("motorcycle_left.png", 200, 420),
    ("motorcycle_right.png", 0, 250), ("motorcycle_right.png", 180, 440),
    ("coins.png", 10, 0), ("coins.png", 10, 90),
    ("moon.png", 100, 100), ("grass.png", 100, 100),
    ("gravel.png", 0, 0), ("brick.png", 200, 200),
    ("ihc.png", 0, 0), ("ihc.png", 224, 224),
    ("astronaut.png", 200, 0), ("coffee.png", 100, 170),
]


def load_gray(name):
    img = skio.imread(SK / name)
    if img.ndim == 3:
        img = img_as_ubyte(rgb2gray(img[..., :3]))
    return img


def crop(img, top, left, size=CROP):
    return img[top:top + size, left:left + size]


def main():
    rng = np.random.default_rng(20210611)

    pristine_dir = ROOT / "pristine"
    pristine_dir.mkdir(parents=True, exist_ok=True)
    crops = []
    for i, (name, top, left) in enumerate(PRISTINE):
        c = crop(load_gray(name), top, left)
        assert c.shape == (CROP, CROP), (name, c.shape)
        skio.imsave(pristine_dir / f"p{i:02d}.png", c, check_contrast=False)
        crops.append(c)

    mini = ROOT / "mini"
    (mini / "images").mkdir(parents=True, exist_ok=True)
    clean_ids, fake_ids = [], []
    for j in range(10):
        src = crops[(2 * j + 1) % len(crops)][48:240, 48:240]
        skio.imsave(mini / "images" / f"real_{j:02d}.png", src, check_contrast=False)
        clean_ids.append(f"images/real_{j:02d}.png")
        kind = j % 3
        f = src.astype(np.float64)
        if kind == 0:
            f = f + rng.normal(0, 25, f.shape)
        elif kind == 1:
            f = gaussian_filter(f, 2.5)
        else:
            f = median_filter(f, 7) + rng.normal(0, 10, f.shape)
        f = np.clip(np.round(f), 0, 255).astype(np.uint8)
        skio.imsave(mini / "images" / f"fake_{j:02d}.png", f, check_contrast=False)
        fake_ids.append(f"images/fake_{j:02d}.png")

    real_texts = [
        "Officials confirm the bridge is closed for repairs until Monday.",
        "Photos from the harbor this morning, water levels are normal.",
        "Our team is on site and will share verified updates soon.",
        "Thank you to the volunteers helping at the shelter tonight.",
        "The city published the official evacuation map here https://city.example/map",
        "Great work by the rescue crews, everyone is safe.",
        "Road reopened after the storm, drive carefully.",
        "Live coverage continues on our channel, stay tuned.",
        "Weather service expects clear skies by the afternoon.",
        "We spoke with the mayor about the recovery plan.",
        "Power has been restored to most homes in the district.",
        "Schools will open as usual tomorrow according to the board.",
        "Happy to report the museum reopened today :)",
    ]
    fake_texts = [
        "SHOCKING!!! Shark swimming on the FLOODED highway!!! #hurricane",
        "They don't want you to see this photo!! RT before it gets deleted!!",
        "UNBELIEVABLE... the statue was destroyed?? Share now!!!",
        "BREAKING: aliens spotted over the city!!! @everyone look :(",
        "This is FAKE news they are hiding the truth!!! #wakeup",
        "OMG the whole town is underwater!!! Terrible disaster!!",
        "You will not believe what happened!!! Horrible scene :(",
        "URGENT!!! Share this before they delete it!!! www.hoax.example",
        "Is this real?? Giant wave hits the coast!!!",
        "We are doomed!!! The dam broke!!! #panic",
        "WOW!! Really?? Lightning struck the tower twice!!!",
        "Scary!!! Zombie outbreak confirmed by anonymous source!!",
    ]

    records = []
    n_events = 5
    for i in range(50):
        fake = i % 2 == 1
        k = i // 2
        text = (fake_texts if fake else real_texts)[k % (12 if fake else 13)]
        has_image = (i % 5) != 4  # 10 imageless messages
        images = []
        if has_image:
            pool = fake_ids if fake else clean_ids
            images.append(pool[k % 10])
            if i % 7 == 0:
                images.append(pool[(k + 3) % 10])
        user = {
            "followers": int(rng.integers(0, 400) if fake else rng.integers(200, 20000)),
            "friends": int(rng.integers(100, 2000) if fake else rng.integers(50, 800)),
            "posts": int(rng.integers(10, 3000)),
            "times_listed": int(rng.integers(0, 5) if fake else rng.integers(2, 200)),
            "likes_given": int(rng.integers(0, 5000)),
            "verified": bool((not fake) and rng.random() < 0.6),
            "has_profile_image": bool(rng.random() < (0.6 if fake else 0.95)),
            "has_homepage_url": bool(rng.random() < (0.2 if fake else 0.7)),
        }
        records.append({
            "id": f"m{i:03d}",
            "event_id": f"event_{i % n_events}",
            "text": text,
            "label": "fake" if fake else "real",
            "retweet_count": int(rng.integers(50, 3000) if fake else rng.integers(0, 300)),
            "like_count": int(rng.integers(0, 2000)),
            "user": user,
            "image_paths": images,
        })

    with open(mini / "messages.jsonl", "w", encoding="utf-8", newline="\n") as fh:
        for r in records:
            fh.write(json.dumps(r, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
