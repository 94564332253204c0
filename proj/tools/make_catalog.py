#!/usr/bin/env python3
"""Regenerates data/catalog.json, the 120-item desk-scale furniture catalog.

The output is committed; rerun only when editing the tables below.
"""
import json
import pathlib

STYLES = ["modern", "minimalist", "japanese", "scandinavian", "industrial",
          "classic", "contemporary", "rustic", "mediterranean", "art_deco",
          "bohemian", "mid_century", "farmhouse", "coastal", "traditional",
          "vintage", "light_luxury", "chinese", "transitional"]
MATERIALS = ["wood", "metal", "leather", "fabric", "glass", "marble", "stone",
             "rattan", "plastic", "velvet", "bamboo", "ceramic", "linen",
             "wicker", "concrete"]

# category -> (placement_class, list of (style, material, w, d, h))
TABLE = {
    "bed": ("floor", [
        ("modern", "fabric", 1.6, 2.0, 1.0),
        ("minimalist", "wood", 1.4, 2.0, 0.9),
        ("japanese", "wood", 1.8, 2.1, 0.8),
        ("scandinavian", "linen", 1.6, 2.1, 1.1),
        ("classic", "leather", 1.8, 2.1, 1.2),
        ("industrial", "metal", 1.4, 2.0, 1.0),
        ("light_luxury", "velvet", 1.8, 2.1, 1.2),
        ("rustic", "wood", 1.5, 2.0, 1.0),
    ]),
    "nightstand": ("floor", [
        ("modern", "wood", 0.5, 0.4, 0.55),
        ("minimalist", "plastic", 0.45, 0.4, 0.5),
        ("scandinavian", "wood", 0.5, 0.4, 0.6),
        ("classic", "marble", 0.55, 0.42, 0.6),
        ("industrial", "metal", 0.45, 0.4, 0.55),
        ("japanese", "bamboo", 0.5, 0.4, 0.5),
        ("coastal", "rattan", 0.5, 0.4, 0.55),
        ("vintage", "wood", 0.55, 0.4, 0.6),
    ]),
    "wardrobe": ("floor", [
        ("modern", "wood", 1.2, 0.6, 2.2),
        ("minimalist", "wood", 1.0, 0.55, 2.0),
        ("classic", "wood", 1.6, 0.6, 2.2),
        ("industrial", "metal", 1.0, 0.55, 2.0),
        ("japanese", "bamboo", 1.2, 0.6, 2.1),
        ("contemporary", "glass", 1.4, 0.6, 2.2),
        ("farmhouse", "wood", 1.2, 0.6, 2.0),
    ]),
    "dresser": ("floor", [
        ("modern", "wood", 1.2, 0.45, 0.85),
        ("vintage", "wood", 1.0, 0.45, 0.8),
        ("art_deco", "marble", 1.4, 0.5, 0.9),
        ("coastal", "wicker", 1.0, 0.45, 0.8),
        ("transitional", "metal", 1.2, 0.5, 0.85),
    ]),
    "desk": ("floor", [
        ("modern", "wood", 1.2, 0.6, 0.75),
        ("minimalist", "metal", 1.0, 0.55, 0.75),
        ("industrial", "metal", 1.4, 0.7, 0.75),
        ("scandinavian", "wood", 1.2, 0.6, 0.75),
        ("mid_century", "wood", 1.1, 0.55, 0.75),
        ("contemporary", "glass", 1.2, 0.6, 0.75),
        ("chinese", "wood", 1.4, 0.7, 0.78),
    ]),
    "chair": ("floor", [
        ("minimalist", "wood", 0.45, 0.5, 0.8),
        ("modern", "wood", 0.5, 0.52, 0.85),
        ("scandinavian", "wood", 0.48, 0.5, 0.82),
        ("japanese", "wood", 0.45, 0.5, 0.8),
        ("rustic", "wood", 0.55, 0.55, 0.95),
        ("industrial", "metal", 0.45, 0.5, 0.85),
        ("modern", "plastic", 0.5, 0.52, 0.82),
        ("mid_century", "leather", 0.55, 0.55, 0.9),
        ("bohemian", "rattan", 0.55, 0.55, 0.9),
        ("contemporary", "fabric", 0.5, 0.52, 0.88),
        ("classic", "velvet", 0.55, 0.55, 0.95),
        ("minimalist", "metal", 0.45, 0.5, 0.8),
        ("coastal", "wicker", 0.5, 0.52, 0.85),
    ]),
    "armchair": ("floor", [
        ("modern", "fabric", 0.8, 0.82, 0.9),
        ("classic", "leather", 0.9, 0.85, 1.0),
        ("mid_century", "leather", 0.8, 0.82, 0.85),
        ("bohemian", "rattan", 0.75, 0.8, 0.9),
        ("scandinavian", "linen", 0.8, 0.82, 0.88),
        ("light_luxury", "velvet", 0.85, 0.85, 0.95),
    ]),
    "sofa": ("floor", [
        ("modern", "fabric", 2.0, 0.9, 0.85),
        ("minimalist", "linen", 1.8, 0.85, 0.8),
        ("classic", "leather", 2.2, 0.95, 0.9),
        ("mid_century", "leather", 2.0, 0.9, 0.85),
        ("scandinavian", "fabric", 1.9, 0.88, 0.82),
        ("light_luxury", "velvet", 2.4, 0.95, 0.9),
        ("coastal", "linen", 2.0, 0.9, 0.85),
        ("contemporary", "velvet", 2.2, 0.92, 0.85),
    ]),
    "stool": ("floor", [
        ("industrial", "metal", 0.35, 0.35, 0.75),
        ("japanese", "wood", 0.4, 0.4, 0.45),
        ("modern", "plastic", 0.38, 0.38, 0.65),
        ("farmhouse", "wood", 0.38, 0.38, 0.7),
        ("bohemian", "rattan", 0.4, 0.4, 0.45),
    ]),
    "coffee_table": ("floor", [
        ("modern", "glass", 1.1, 0.55, 0.4),
        ("minimalist", "wood", 1.0, 0.5, 0.4),
        ("industrial", "concrete", 1.2, 0.6, 0.4),
        ("art_deco", "marble", 1.1, 0.6, 0.42),
        ("japanese", "wood", 1.0, 0.5, 0.35),
        ("rustic", "stone", 1.2, 0.6, 0.42),
    ]),
    "dining_table": ("floor", [
        ("modern", "wood", 1.6, 0.85, 0.75),
        ("farmhouse", "wood", 1.8, 0.9, 0.76),
        ("industrial", "metal", 1.4, 0.8, 0.75),
        ("contemporary", "glass", 1.6, 0.85, 0.75),
        ("mediterranean", "stone", 1.8, 0.9, 0.76),
        ("art_deco", "marble", 1.6, 0.9, 0.76),
    ]),
    "side_table": ("floor", [
        ("modern", "metal", 0.45, 0.45, 0.55),
        ("mediterranean", "ceramic", 0.5, 0.5, 0.55),
        ("bohemian", "wicker", 0.45, 0.45, 0.5),
        ("traditional", "wood", 0.5, 0.5, 0.6),
        ("light_luxury", "marble", 0.45, 0.45, 0.55),
    ]),
    "bookshelf": ("floor", [
        ("modern", "wood", 1.0, 0.32, 2.0),
        ("industrial", "metal", 1.2, 0.35, 2.1),
        ("scandinavian", "wood", 0.8, 0.3, 1.8),
        ("traditional", "wood", 1.2, 0.35, 2.1),
        ("chinese", "bamboo", 0.9, 0.3, 1.9),
        ("contemporary", "glass", 1.0, 0.32, 1.9),
    ]),
    "cabinet": ("floor", [
        ("modern", "wood", 1.0, 0.42, 1.0),
        ("traditional", "wood", 1.2, 0.45, 1.2),
        ("chinese", "wood", 0.8, 0.4, 1.1),
        ("industrial", "metal", 1.0, 0.42, 0.9),
        ("mediterranean", "ceramic", 0.9, 0.42, 1.0),
    ]),
    "tv_stand": ("floor", [
        ("modern", "wood", 1.6, 0.42, 0.5),
        ("minimalist", "concrete", 1.8, 0.45, 0.45),
        ("mid_century", "wood", 1.5, 0.4, 0.55),
        ("industrial", "metal", 1.6, 0.42, 0.5),
    ]),
    "shelf": ("floor", [
        ("minimalist", "wood", 0.8, 0.25, 1.2),
        ("industrial", "metal", 1.0, 0.3, 1.8),
        ("farmhouse", "wood", 0.9, 0.28, 1.5),
        ("vintage", "bamboo", 0.8, 0.25, 1.4),
    ]),
    "ceiling_lamp": ("ceiling", [
        ("modern", "glass", 0.5, 0.5, 0.3),
        ("minimalist", "metal", 0.4, 0.4, 0.25),
        ("art_deco", "glass", 0.6, 0.6, 0.3),
        ("japanese", "linen", 0.5, 0.5, 0.28),
    ]),
    "pendant_lamp": ("ceiling", [
        ("industrial", "metal", 0.35, 0.35, 0.5),
        ("scandinavian", "wood", 0.4, 0.4, 0.45),
        ("coastal", "rattan", 0.5, 0.5, 0.6),
    ]),
    "floor_lamp": ("floor", [
        ("modern", "metal", 0.4, 0.4, 1.6),
        ("mid_century", "metal", 0.45, 0.45, 1.7),
        ("japanese", "linen", 0.35, 0.35, 1.5),
        ("vintage", "ceramic", 0.4, 0.4, 1.6),
    ]),
    "ottoman": ("floor", [
        ("modern", "fabric", 0.55, 0.55, 0.42),
        ("bohemian", "velvet", 0.6, 0.6, 0.45),
        ("transitional", "leather", 0.5, 0.5, 0.4),
    ]),
    "console_table": ("floor", [
        ("transitional", "wood", 1.1, 0.38, 0.8),
        ("art_deco", "metal", 1.2, 0.4, 0.8),
        ("traditional", "marble", 1.0, 0.35, 0.8),
    ]),
}


def main():
    items = []
    for category, (placement, rows) in TABLE.items():
        for i, (style, material, w, d, h) in enumerate(rows, start=1):
            assert style in STYLES and material in MATERIALS, (category, style, material)
            name = " ".join(s.replace("_", " ").title()
                            for s in (style, material, category))
            items.append({
                "spec_id": f"{category}_{i:02d}",
                "category": category,
                "style": style,
                "material": material,
                "dims": [w, d, h],
                "placement_class": placement,
                "display_name": name,
            })
    assert len(items) == 120, len(items)
    assert len(TABLE) == 21
    assert {i["style"] for i in items} == set(STYLES)
    assert {i["material"] for i in items} == set(MATERIALS)
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    out.write_text(json.dumps(items, indent=1) + "\n")


if __name__ == "__main__":
    main()
