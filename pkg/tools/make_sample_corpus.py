#!/usr/bin/env python3
"""Regenerate sample_corpus/ from the declarative data below.

Output is byte-deterministic: article JSON is written with a fixed key
order and the placeholder PNGs derive their pixels from the file name.
Run from the repository root:

    python3 tools/make_sample_corpus.py
"""

from __future__ import annotations

import hashlib
import json
import struct
import zlib
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1] / "sample_corpus"

GLOSSARIES = [
    {
        "id": "early-islam",
        "title": "Early Islam in the Archipelago",
        "description": "How Islam first arrived along the trade routes of "
        "Sumatra and the Malay coast, carried by merchants and travelling scholars.",
        "era": "classical",
    },
    {
        "id": "islamic-kingdoms",
        "title": "The Islamic Kingdoms",
        "description": "Sultanates that carried Islam across Java, Sulawesi, "
        "and the eastern islands between the fifteenth and seventeenth centuries.",
        "era": "classical",
    },
    {
        "id": "colonial-era",
        "title": "Faith under Colonial Rule",
        "description": "Wars and movements in which Islam shaped resistance "
        "to colonial expansion across the archipelago.",
        "era": "modern",
    },
    {
        "id": "national-awakening",
        "title": "Islam and the National Awakening",
        "description": "Modern Islamic organizations and their part in the "
        "road to Indonesian independence.",
        "era": "modern",
    },
]

# One tuple per article:
# (id, title, body, glossary, date, location, images, tags)
# date: {"start": {...}} or {"start": {...}, "end": {...}}
# location: (lat, lon, place)
ARTICLES = [
    (
        "samudera-pasai",
        "Sultanate of Samudera Pasai Established",
        "On the northern coast of Sumatra the harbor town of Pasai grew into "
        "the first Muslim sultanate of the archipelago. Its rulers minted gold "
        "dirham coins and drew traders from Gujarat, Bengal, and China, making "
        "the port a gateway through which Islam entered the region.",
        "early-islam",
        {"start": {"year": 1290}},
        (5.188, 97.141, "Lhokseumawe, Aceh"),
        [
            {
                "path": "images/pasai-dirham.png",
                "caption": "Gold dirham struck at Pasai",
                "credit": "Fixture Atlas drawings",
            }
        ],
        ["sultanate", "sumatra", "trade"],
    ),
    (
        "malik-al-saleh",
        "Reign of Sultan Malik al-Saleh",
        "Malik al-Saleh, remembered as the first sultan of Samudera Pasai, "
        "ruled the young harbor state until his death. His gravestone, carved "
        "with Arabic script, is among the oldest dated Muslim royal monuments "
        "in Southeast Asia and anchors the chronology of early Islam in Sumatra.",
        "early-islam",
        {"start": {"year": 1290}, "end": {"year": 1297}},
        (5.247, 97.032, "Geudong, Aceh"),
        [],
        ["sultanate", "sumatra"],
    ),
    (
        "marco-polo-perlak",
        "Marco Polo Calls at Perlak",
        "Returning west from China, Marco Polo spent months on the Sumatran "
        "coast and recorded that the town of Perlak was already Muslim, its "
        "people converted by the merchants who frequented the port. His "
        "account is the earliest European notice of Islam in the archipelago.",
        "early-islam",
        {"start": {"year": 1292}},
        (4.635, 97.789, "Peureulak, Aceh"),
        [
            {
                "path": "images/perlak-coast.png",
                "caption": "The coast near Peureulak",
            }
        ],
        ["travelogue", "sumatra"],
    ),
    (
        "terengganu-stone",
        "The Terengganu Inscription Stone",
        "A granite pillar found at Kuala Berang carries the oldest known "
        "Malay text in Jawi script, proclaiming Islamic law for the ruler's "
        "subjects. The stone shows how quickly Islam moved from the ports "
        "into the river valleys of the peninsula.",
        "early-islam",
        {"start": {"year": 1303}},
        (5.073, 103.012, "Kuala Berang, Terengganu"),
        [],
        ["inscription", "law"],
    ),
    (
        "ibn-battuta-samudera",
        "Ibn Battuta Visits Samudera",
        "The Moroccan traveller Ibn Battuta broke his voyage to China at "
        "Samudera, where he found a devout court that followed the Shafi'i "
        "school and a sultan who debated jurists after Friday prayers. His "
        "journal preserves a rare portrait of the sultanate at its height.",
        "early-islam",
        {"start": {"year": 1345}},
        (5.170, 97.130, "Samudera, Aceh"),
        [],
        ["travelogue", "sumatra"],
    ),
    (
        "gresik-malik-ibrahim",
        "Maulana Malik Ibrahim Settles in Gresik",
        "The teacher Maulana Malik Ibrahim, honored as the eldest of the "
        "nine wali, settled at the harbor of Gresik and preached to farmers "
        "and port workers in eastern Java. His tomb became a pilgrimage site "
        "and marks the opening of Java's conversion.",
        "early-islam",
        {"start": {"year": 1404}},
        (-7.154, 112.655, "Gresik, East Java"),
        [],
        ["wali", "java"],
    ),
    (
        "malacca-conversion",
        "Malacca Adopts Islam",
        "When its ruler took the title of sultan, the young entrepot of "
        "Malacca bound itself to the Muslim trading world. Command of the "
        "strait let Malacca spread the faith to every coast its ships "
        "touched, from Sumatra to the spice islands.",
        "islamic-kingdoms",
        {"start": {"year": 1414}},
        (2.194, 102.249, "Malacca"),
        [
            {
                "path": "images/malacca-strait.png",
                "caption": "Shipping lanes off Malacca",
            }
        ],
        ["sultanate", "trade"],
    ),
    (
        "demak",
        "Rise of the Demak Sultanate",
        "Demak, a port on Java's north coast, rose under Raden Patah to "
        "become the island's first Islamic sultanate. Guided by the council "
        "of the wali songo, Demak built its Great Mosque, broke the power of "
        "old Majapahit, and sent fleets against the Portuguese at Malacca.",
        "islamic-kingdoms",
        {"start": {"year": 1478}, "end": {"year": 1518}},
        (-6.894, 110.638, "Demak, Central Java"),
        [
            {
                "path": "images/demak-mosque.png",
                "caption": "Great Mosque of Demak",
            },
            {
                "path": "images/demak-harbor.png",
                "caption": "The harbor road at Demak",
                "credit": "Fixture Atlas drawings",
            },
        ],
        ["sultanate", "java", "wali"],
    ),
    (
        "cirebon",
        "Sunan Gunung Jati and the Court of Cirebon",
        "Sunan Gunung Jati, one of the nine wali, made Cirebon a sultanate "
        "and a school for preachers on Java's north coast. Allied by "
        "marriage and faith with Demak, his court carried Islam westward "
        "into the Sunda lands.",
        "islamic-kingdoms",
        {"start": {"year": 1479}},
        (-6.732, 108.552, "Cirebon, West Java"),
        [
            {
                "path": "images/cirebon-gate.png",
                "caption": "Gate of the Kasepuhan court",
            }
        ],
        ["wali", "java", "sultanate"],
    ),
    (
        "aceh-sultanate",
        "Foundation of the Aceh Sultanate",
        "At the northern tip of Sumatra, Ali Mughayat Syah united the "
        "harbor towns around Banda Aceh into a new sultanate. Aceh grew "
        "into the strongest Muslim power on the island, famed for its "
        "scholars as much as its pepper fleets.",
        "islamic-kingdoms",
        {"start": {"year": 1496}},
        (5.548, 95.324, "Banda Aceh"),
        [
            {
                "path": "images/aceh-harbor.png",
                "caption": "Harbor of Banda Aceh",
            }
        ],
        ["sultanate", "sumatra"],
    ),
    (
        "banten",
        "Banten Becomes a Sultanate",
        "Preachers and soldiers from Demak and Cirebon won the port of "
        "Banten for Islam, and under Hasanuddin it became a sultanate "
        "commanding the Sunda Strait. Its pepper trade drew ships from "
        "Arabia to China and funded a grand court mosque.",
        "islamic-kingdoms",
        {"start": {"year": 1526}},
        (-6.035, 106.155, "Banten, West Java"),
        [],
        ["sultanate", "java", "trade"],
    ),
    (
        "ternate-baabullah",
        "Sultan Baabullah Retakes Ternate",
        "After years of siege, Sultan Baabullah drove the Portuguese from "
        "their fort on Ternate and made the clove island the center of an "
        "Islamic realm reaching across the Moluccas. His reign is remembered "
        "as the sultanate's golden age.",
        "islamic-kingdoms",
        {"start": {"year": 1575}},
        (0.790, 127.363, "Ternate, Maluku"),
        [
            {
                "path": "images/ternate-fort.png",
                "caption": "The fort above Ternate town",
            }
        ],
        ["sultanate", "maluku", "spice-trade"],
    ),
    (
        "mataram-islam",
        "Mataram Turns to Islam under Senopati",
        "From his brick-walled town at Kotagede, Panembahan Senopati built "
        "Mataram into the chief power of inland Java and bound its court to "
        "Islam. The kingdom fused Javanese royal tradition with the faith "
        "the coastal wali had planted a century before.",
        "islamic-kingdoms",
        {"start": {"year": 1587}},
        (-7.828, 110.399, "Kotagede, Yogyakarta"),
        [
            {
                "path": "images/kotagede-gate.png",
                "caption": "Brick gate at Kotagede",
            }
        ],
        ["kingdom", "java"],
    ),
    (
        "gowa-conversion",
        "The Kingdom of Gowa Embraces Islam",
        "The twin kingdoms of Gowa and Tallo at Makassar accepted Islam "
        "through the preaching of Minangkabau teachers, and their rulers "
        "took the faith to the courts of south Sulawesi. Makassar soon "
        "became the great Muslim port of the eastern seas.",
        "islamic-kingdoms",
        {"start": {"year": 1605, "month": 9}},
        (-5.147, 119.432, "Makassar, South Sulawesi"),
        [
            {
                "path": "images/gowa-palace.png",
                "caption": "The Gowa royal hall",
            }
        ],
        ["kingdom", "sulawesi"],
    ),
    (
        "padri-war",
        "The Padri War in Minangkabau",
        "Returning pilgrims known as the Padri set out to purify religious "
        "life in the Minangkabau highlands, and the quarrel widened into a "
        "long war that drew in the Dutch. Imam Bonjol's defense of his "
        "hill fort made him a lasting symbol of pious resistance.",
        "colonial-era",
        {"start": {"year": 1803}, "end": {"year": 1837}},
        (0.022, 100.222, "Bonjol, West Sumatra"),
        [
            {
                "path": "images/bonjol-highlands.png",
                "caption": "Highlands around Bonjol",
            }
        ],
        ["war", "sumatra"],
    ),
    (
        "diponegoro",
        "Prince Diponegoro's Java War",
        "When colonial road-builders staked a line across his family's "
        "graves at Tegalrejo, Prince Diponegoro raised central Java in "
        "revolt. Fighting as a Muslim prince under the banner of a just "
        "war, he held out for five years in the longest campaign the Dutch "
        "fought on the island.",
        "colonial-era",
        {
            "start": {"year": 1825, "month": 7, "day": 21},
            "end": {"year": 1830, "month": 3, "day": 28},
        },
        (-7.783, 110.353, "Tegalrejo, Yogyakarta"),
        [
            {
                "path": "images/diponegoro-field.png",
                "caption": "Campaign country south of Yogyakarta",
            }
        ],
        ["war", "java"],
    ),
    (
        "banjarmasin-war",
        "The Banjarmasin War",
        "A disputed succession in the sultanate of Banjarmasin gave the "
        "Dutch a pretext to abolish the throne, and Prince Antasari led "
        "river communities of south Kalimantan into years of resistance. "
        "The war ended the old sultanate but not the region's attachment "
        "to its faith.",
        "colonial-era",
        {"start": {"year": 1859}, "end": {"year": 1863}},
        (-3.319, 114.591, "Banjarmasin, South Kalimantan"),
        [],
        ["war", "kalimantan"],
    ),
    (
        "aceh-war",
        "The Aceh War Opens",
        "A Dutch ultimatum to the sultan of Aceh expired and the first "
        "expedition landed near Banda Aceh, opening the longest colonial "
        "war in the archipelago. Resistance organized around the ulama "
        "turned the conflict into a decades-long struggle.",
        "colonial-era",
        {"start": {"year": 1873, "month": 3, "day": 26}},
        (5.550, 95.320, "Banda Aceh"),
        [],
        ["war", "sumatra"],
    ),
    (
        "sarekat-islam",
        "Sarekat Islam Rises from the Traders' League",
        "What began as a mutual-aid league of batik traders in Surakarta "
        "reorganized under the name Sarekat Islam and grew into the first "
        "mass movement of the Indies. Its meetings joined commerce, faith, "
        "and the first open talk of self-rule.",
        "national-awakening",
        {"start": {"year": 1912, "month": 9}},
        (-7.575, 110.824, "Surakarta, Central Java"),
        [],
        ["organization", "movement"],
    ),
    (
        "muhammadiyah",
        "Muhammadiyah Founded in Kauman",
        "In the Kauman quarter of Yogyakarta, Ahmad Dahlan founded "
        "Muhammadiyah to renew Islamic practice through modern schooling, "
        "clinics, and orphanages. The organization's teachers spread its "
        "schools across Java within a generation.",
        "national-awakening",
        {"start": {"year": 1912, "month": 11, "day": 18}},
        (-7.804, 110.362, "Kauman, Yogyakarta"),
        [
            {
                "path": "images/kauman-mosque.png",
                "caption": "The Kauman mosque quarter",
                "credit": "Fixture Atlas drawings",
            }
        ],
        ["organization", "education"],
    ),
    (
        "nahdlatul-ulama",
        "Nahdlatul Ulama Established in Surabaya",
        "Kiai Hasyim Asy'ari and fellow pesantren scholars met in Surabaya "
        "to found Nahdlatul Ulama, the awakening of the religious scholars, "
        "to defend traditional learning and organize rural Muslim life. It "
        "grew into one of the largest Islamic bodies in the world.",
        "national-awakening",
        {"start": {"year": 1926, "month": 1, "day": 31}},
        (-7.258, 112.738, "Surabaya, East Java"),
        [
            {
                "path": "images/surabaya-kampung.png",
                "caption": "A Surabaya kampung lane in the 1920s",
            }
        ],
        ["organization", "pesantren"],
    ),
    (
        "youth-pledge",
        "The Youth Pledge",
        "Delegates of youth associations from across the Indies, including "
        "the Muslim youth leagues, met in Batavia and swore to one "
        "motherland, one nation, and one language. The pledge gave the "
        "independence movement its common voice.",
        "national-awakening",
        {"start": {"year": 1928, "month": 10, "day": 28}},
        (-6.186, 106.840, "Batavia"),
        [],
        ["movement", "congress"],
    ),
    (
        "proklamasi",
        "Proclamation of Indonesian Independence",
        "At a house on Pegangsaan Timur in Jakarta, Sukarno read the "
        "proclamation of independence on the morning of 17 August 1945. "
        "Muslim leaders had helped draft the charter that preceded it, and "
        "the new republic counted their movements among its founders.",
        "national-awakening",
        {"start": {"year": 1945, "month": 8, "day": 17}},
        (-6.200, 106.816, "Jakarta"),
        [
            {
                "path": "images/pegangsaan-timur.png",
                "caption": "Pegangsaan Timur 56 on the morning of the proclamation",
            }
        ],
        ["independence", "proclamation"],
    ),
    (
        "sovereignty-transfer",
        "The Transfer of Sovereignty",
        "After four years of revolution and negotiation, the Netherlands "
        "transferred sovereignty to the United States of Indonesia in "
        "ceremonies held at Amsterdam and Jakarta. The flag raised that "
        "December morning closed three and a half centuries of colonial rule.",
        "national-awakening",
        {"start": {"year": 1949, "month": 12, "day": 27}},
        (-6.175, 106.827, "Jakarta"),
        [
            {
                "path": "images/jakarta-1949.png",
                "caption": "Flag raising in Jakarta, December 1949",
            }
        ],
        ["independence", "diplomacy"],
    ),
]


def write_png(path: Path, name: str) -> None:
    """Tiny deterministic truecolor PNG derived from the file name."""
    width, height = 48, 32
    digest = hashlib.sha256(name.encode()).digest()
    base = digest[:3]
    accent = digest[3:6]
    rows = bytearray()
    for y in range(height):
        rows.append(0)  # no filter
        for x in range(width):
            color = accent if (x // 8 + y // 8) % 2 else base
            rows.extend(color)

    def chunk(tag: bytes, data: bytes) -> bytes:
        return (
            struct.pack(">I", len(data))
            + tag
            + data
            + struct.pack(">I", zlib.crc32(tag + data))
        )

    png = b"\x89PNG\r\n\x1a\n"
    png += chunk(b"IHDR", struct.pack(">IIBBBBB", width, height, 8, 2, 0, 0, 0))
    png += chunk(b"IDAT", zlib.compress(bytes(rows), 9))
    png += chunk(b"IEND", b"")
    path.write_bytes(png)


def main() -> None:
    (ROOT / "articles").mkdir(parents=True, exist_ok=True)
    (ROOT / "images").mkdir(parents=True, exist_ok=True)
    (ROOT / "glossaries.json").write_text(
        json.dumps(GLOSSARIES, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    image_paths = set()
    for article_id, title, body, glossary, date, location, images, tags in ARTICLES:
        lat, lon, place = location
        doc = {
            "id": article_id,
            "title": title,
            "body": body,
            "glossary": glossary,
            "date": date,
            "location": {"lat": lat, "lon": lon, "place": place},
        }
        if images:
            doc["images"] = images
            image_paths.update(img["path"] for img in images)
        if tags:
            doc["tags"] = tags
        (ROOT / "articles" / f"{article_id}.json").write_text(
            json.dumps(doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
    for rel in sorted(image_paths):
        write_png(ROOT / rel, rel)
    print(f"wrote {len(ARTICLES)} articles, {len(GLOSSARIES)} glossaries, "
          f"{len(image_paths)} images under {ROOT}")


if __name__ == "__main__":
    main()
