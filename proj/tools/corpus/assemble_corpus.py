#!/usr/bin/env python3
"""Assemble the desk training corpus under data/corpus/{ransom,benign}/.

The ransom class is synthesized from phrase banks modelled on publicly
circulated ransom notes (contact blocks, payment instructions, threats and
"do not" warnings vary independently). The benign class mixes generated
newsgroup-style posts over a range of topics with README files and source
files harvested from the local system.

Output is deterministic for a given --seed and set of installed files.
"""

import argparse
import glob
import os
import random
import shutil
import string

MAX_DOC_BYTES = 12 * 1024

# ---------------------------------------------------------------- ransom notes

FAMILIES = [
    "LockBit", "Conti", "REvil", "Sodinokibi", "HelloKitty", "IceFire", "BlackCat",
    "Hive", "Ryuk", "Maze", "Egregor", "DarkSide", "BlackMatter", "Phobos", "Dharma",
    "Stop/Djvu", "Makop", "Medusa", "Akira", "Royal", "Play", "Rhysida", "Cuba",
    "Babuk", "AvosLocker", "Vice Society", "Ragnar Locker", "Clop", "Nefilim",
    "Mallox", "BianLian", "Quantum", "Karakurt", "NoEscape", "Trigona", "Cactus",
    "8Base", "Hunters", "Qilin", "Money Message", "Cl0p", "Zeppelin", "GlobeImposter",
    "Everest", "Snatch", "Pysa", "Mespinoza", "NetWalker", "Avaddon", "Ranzy",
]

EXTENSIONS = [".locked", ".lockbit", ".crypt", ".enc", ".kitty", ".iFire", ".encrypted",
              ".akira", ".royal", ".play", ".hive", ".phobos", ".djvu", ".makop", ".medusa",
              ".cuba", ".babyk", ".avos", ".clop", ".zeppelin", ".8base", ".qilin", ".cactus"]

NOTE_NAMES = ["README.txt", "HOW_TO_DECRYPT.txt", "RESTORE_FILES.txt", "!!!READ_ME!!!.txt",
              "DECRYPT_INSTRUCTIONS.txt", "read_me_to_recover.txt", "RECOVERY-INFO.txt",
              "_readme.txt", "info.txt", "HOW_TO_RESTORE_YOUR_DATA.txt"]

HEADERS = [
    "~~~ {family} ransomware ~~~",
    "---=== Welcome. Again. ===---",
    "!!! ATTENTION !!!",
    "YOUR FILES ARE ENCRYPTED",
    "All your files have been encrypted by {family}",
    "=== {family} ===",
    "Hello!",
    "Dear management,",
    "ATTENTION! Don't worry, you can return all your files!",
    "::: Greetings :::",
    "What happened?",
    "Your network has been penetrated.",
    "[+] Whats Happen? [+]",
    "Hi! Your company's network was hacked.",
    "!!! YOUR NETWORK IS LOCKED !!!",
    "",
]

WHAT_HAPPENED = [
    "All of your files are encrypted with strong military algorithms RSA-4096 and AES-256.",
    "Your files are encrypted, and currently unavailable. You can check it: all files on your system have extension {ext}.",
    "All your important files like documents, photos, databases and other were encrypted with the strongest encryption and unique key.",
    "Your servers and workstations were encrypted and backups were deleted. We used strong encryption algorithms.",
    "All files on each host in the network have been encrypted with a strong algorithm.",
    "We have encrypted your data and exfiltrated sensitive documents from your network.",
    "Your documents, photos, databases and other important files have been encrypted with a unique key generated for this computer.",
    "By the way, everything is possible to restore (recover), but you need to follow our instructions. Otherwise, you cant return your data (NEVER).",
    "Your data is encrypted with ChaCha20 and the key is protected with RSA. The only way to get your files back is to purchase the private key from us.",
    "Every byte on any types of your devices was encrypted. Don't try to use backups because they were encrypted too.",
    "Unfortunately for you, a major IT security weakness left you open to attack, your files have been encrypted.",
    "All of your computers have been corrupted and the files are locked. Shadow copies were deleted.",
    "Your company has been attacked and all critical systems are encrypted. Your backups were wiped.",
    "The files on this computer were encrypted. It is impossible to recover them without our decryption software.",
]

EXFIL = [
    "We also downloaded more than {gb} GB of your confidential data, including financial reports, contracts, employee records and customer databases.",
    "Before encryption we downloaded your private data: accounting, HR, client lists, passports and emails. It will be published on our blog if you do not contact us.",
    "Your sensitive data has been stolen. If you do not pay, the data will be leaked on our news site and sold to your competitors.",
    "We have copied {gb} GB of your files. If we do not receive payment, we will publish everything and notify your clients and regulators about the breach.",
    "Data leak site: your company will appear in our list with a countdown timer. After the timer expires the archives will be available for download.",
]

HOW_TO_RECOVER = [
    "To recover your files you need to buy our special decryption software and a private key.",
    "The only method of recovering files is to purchase decrypt tool and unique key for you.",
    "To get the decryptor you need to pay {amount} in Bitcoin to the wallet below.",
    "You can decrypt all your files only with our decryptor. The price of the decryptor is {amount}.",
    "If you want to restore your data, write to us and we will send you instructions and the price.",
    "Price of private key and decrypt software is {amount}. Discount 50% available if you contact us first 72 hours.",
    "To restore your system and get your files back you must pay the ransom. Payment is accepted only in Bitcoin or Monero.",
    "You have to pay for decryption in Bitcoins. The price depends on how fast you write to us.",
    "We are ready to negotiate. Once the payment is received we will provide the decryption tool and delete the stolen data.",
    "After payment you will receive a decryption program which will restore all your files.",
]

FREE_TEST = [
    "As a guarantee you can send us up to 3 files for free decryption. Files must not contain valuable information and total size less than 5 MB.",
    "Before paying you can send us 1 file for free decryption to prove that we can restore your data.",
    "You can send one of your encrypted file from your PC and we decrypt it for free.",
    "Free decryption as guarantee: send 2 small files (less than 1 MB, not databases or backups) and we will return them decrypted.",
    "We can decrypt a couple of test files to demonstrate that the decryption works.",
]

CONTACT_INTRO = [
    "To contact us, install TOR browser and open the link:",
    "Contact us by email:",
    "Write to our email:",
    "How to contact us: download Tor Browser from https://www.torproject.org/ and visit",
    "Our contacts:",
    "For contact use the chat on our website:",
    "Reserve e-mail address to contact us:",
    "Open our chat in Tor browser:",
    "Contact information:",
]

CONTACT_TAIL = [
    "Your personal ID: {pid}",
    "Write this ID in the title of your message: {pid}",
    "Your decryption ID is {pid}. Keep it, you will need it to pay.",
    "Login with your key: {pid}",
    "Put this key in the chat: {pid}",
    "Personal identifier: {pid}",
]

PAYMENT = [
    "Send {amount} worth of Bitcoin to this address: {btc}",
    "Bitcoin wallet: {btc}",
    "Payment address (BTC): {btc}",
    "Pay {amount} to the following bitcoin address {btc} and send the transaction id to our email.",
    "Buy bitcoins at any exchange and transfer them to {btc}",
    "Monero accepted as well, the address will be provided in the chat.",
]

DEADLINE = [
    "You have 72 hours to contact us, otherwise the price will be doubled.",
    "If you do not contact us within 48 hours, your private key will be deleted and the files will be lost forever.",
    "The price will increase after 7 days. After 14 days the decryption key will be destroyed.",
    "You have 3 days to make the payment. Every day of delay increases the price by 10%.",
    "Time is running out. After the deadline the decryptor will not be available.",
    "If you don't pay within 5 days, all data will be published.",
]

WARNINGS = [
    "Do not rename encrypted files.",
    "Do not try to decrypt your data using third party software, it may cause permanent data loss.",
    "Don't try to recover files yourself, you will damage them.",
    "Do not modify or delete encrypted files and this readme.",
    "Do not contact police or data recovery companies, they will just waste your time and money.",
    "Don't turn off or reboot the computer, the decryption key may be lost.",
    "Antivirus programs can delete the decryptor and you will lose your files forever.",
    "Any attempt to restore your files with third-party software will be fatal for them.",
    "Do NOT shutdown or reset your system. This may damage your files permanently.",
    "Attention! Recovery companies only increase the price, they buy the decryptor from us.",
    "Don't waste time. No one can help you without our private key.",
]

CLOSINGS = [
    "We are not interested in destroying your business, we only want money.",
    "This is just business. We absolutely do not care about you and your deals, except getting benefits.",
    "If we do not get an answer, we will attack your company again.",
    "We guarantee that you will restore all your files after payment.",
    "Remember, we have your data and the only key to decrypt it.",
    "Our reputation is important to us, we always keep our word.",
    "Good luck.",
    "Regards, {family} team.",
    "Do not be afraid to contact us. We will help you restore your business.",
    "",
]

SEPARATORS = ["", "-----------------------------------------", "=========================",
              "*****", "~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~"]

B58 = "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz"


def btc_address(rng):
    if rng.random() < 0.4:
        return "bc1q" + "".join(rng.choice("023456789acdefghjklmnpqrstuvwxyz") for _ in range(38))
    return rng.choice("13") + "".join(rng.choice(B58) for _ in range(rng.randint(26, 33)))


def onion_address(rng):
    host = "".join(rng.choice(string.ascii_lowercase + "234567") for _ in range(56))
    path = rng.choice(["", "/", "/chat", "/?id=" + str(rng.randint(1000, 99999)), "/login"])
    return "http://" + host + ".onion" + path


def email_address(rng):
    user = "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(5, 12)))
    if rng.random() < 0.5:
        user += str(rng.randint(1, 999))
    domain = rng.choice(["protonmail.com", "onionmail.org", "tutanota.com", "cock.li",
                         "airmail.cc", "gmx.com", "msgsafe.io", "mailfence.com", "proton.me"])
    return user + "@" + domain


def personal_id(rng):
    return "".join(rng.choice("0123456789ABCDEF") for _ in range(rng.choice([16, 24, 32])))


def ransom_note(rng):
    family = rng.choice(FAMILIES)
    fmt = dict(family=family, ext=rng.choice(EXTENSIONS), gb=rng.choice([47, 120, 250, 600, 1100]),
               amount=rng.choice(["$500", "$980", "0.05 BTC", "0.5 BTC", "2 BTC", "$50,000",
                                  "$1,200,000", "300 USD", "1500 dollars"]),
               pid=personal_id(rng), btc=btc_address(rng))
    sep = rng.choice(SEPARATORS)
    blocks = []
    head = rng.choice(HEADERS).format(**fmt)
    if head:
        blocks.append(head.upper() if rng.random() < 0.3 else head)
    blocks.append(" ".join(s.format(**fmt) for s in rng.sample(WHAT_HAPPENED, rng.randint(1, 3))))
    if rng.random() < 0.45:
        blocks.append(rng.choice(EXFIL).format(**fmt))
    blocks.append(" ".join(s.format(**fmt) for s in rng.sample(HOW_TO_RECOVER, rng.randint(1, 2))))
    if rng.random() < 0.6:
        blocks.append(rng.choice(FREE_TEST))
    contacts = [rng.choice(CONTACT_INTRO)]
    for _ in range(rng.randint(1, 3)):
        contacts.append(onion_address(rng) if rng.random() < 0.5 else email_address(rng))
    if rng.random() < 0.8:
        contacts.append(rng.choice(CONTACT_TAIL).format(**fmt))
    blocks.append("\n".join(contacts))
    if rng.random() < 0.55:
        blocks.append(rng.choice(PAYMENT).format(**fmt))
    if rng.random() < 0.6:
        blocks.append(rng.choice(DEADLINE))
    warn = rng.sample(WARNINGS, rng.randint(1, 4))
    bullet = rng.choice(["* ", "- ", "! ", ""])
    blocks.append("\n".join(bullet + w for w in warn))
    close = rng.choice(CLOSINGS).format(**fmt)
    if close:
        blocks.append(close)
    if rng.random() < 0.3:
        tail = blocks[1:]
        rng.shuffle(tail)
        blocks = blocks[:1] + tail
    joiner = "\n\n" if not sep else "\n" + sep + "\n"
    text = joiner.join(blocks) + "\n"
    if rng.random() < 0.15:
        text = text.upper()
    return text


# ------------------------------------------------------------- newsgroup posts

TOPICS = {
    "sci.space": [
        "The shuttle launch was delayed again because of a problem with one of the main engine sensors.",
        "Does anyone have figures for the delta-v needed to reach lunar orbit from LEO?",
        "The Hubble images released this week show remarkable detail in the Orion nebula.",
        "NASA's budget for next fiscal year cuts funding for the space station redesign.",
        "Orbital debris is becoming a serious concern for low earth orbit operations.",
        "The Magellan probe continues mapping the surface of Venus with synthetic aperture radar.",
        "A single stage to orbit vehicle would dramatically lower launch costs if it can be built.",
        "The Galileo high gain antenna still refuses to deploy, so data rates are very low.",
        "I read that the Russians are offering Mir flights to paying passengers.",
        "Solar sails need a very large area relative to their mass to be practical.",
        "The comet will be visible with binoculars just after sunset next month.",
        "Telescope mirrors of that size must be ground to a fraction of a wavelength.",
    ],
    "rec.sport.hockey": [
        "The Penguins won again last night, Lemieux scored twice in the third period.",
        "Does anyone know when the playoff schedule will be posted?",
        "Their goalie has been brilliant all season but the defense is thin.",
        "I think the trade for the veteran center was a mistake for the long term.",
        "The power play is converting at less than fifteen percent this month.",
        "Tickets for the home opener sold out in under an hour.",
        "The referee missed an obvious tripping call in overtime.",
        "Expansion teams usually struggle for the first few seasons.",
        "The rookie leads the league in assists among first year players.",
        "Whoever wins the division will face the defending champions in round one.",
    ],
    "rec.sport.baseball": [
        "The pitcher threw a complete game shutout with eleven strikeouts.",
        "His batting average dropped after the injury but his power numbers are fine.",
        "The designated hitter rule should be applied in both leagues.",
        "Spring training reports say the new shortstop has excellent range.",
        "The bullpen blew three saves in the last week alone.",
        "Attendance at the new stadium has been strong since opening day.",
        "Stolen bases are down across the league this year.",
        "The manager was ejected for arguing balls and strikes.",
    ],
    "talk.politics.misc": [
        "The committee hearings on the budget proposal continue next week.",
        "The senator argued that the tax increase would hurt small businesses.",
        "Polling data shows voters are divided on health care reform.",
        "The new administration promised to reduce the deficit within four years.",
        "Campaign finance rules need to be enforced more consistently.",
        "The governor vetoed the bill citing concerns about enforcement costs.",
        "Local elections rarely get the attention they deserve.",
        "Lobbying disclosure requirements were tightened after the scandal.",
        "The court ruling will likely be appealed to a higher court.",
    ],
    "sci.med": [
        "My doctor recommended reducing salt intake to control blood pressure.",
        "Clinical trials for the new vaccine are entering phase three.",
        "Chronic fatigue syndrome remains poorly understood by researchers.",
        "Antibiotic resistance is increasing because of overprescription.",
        "The study found no significant link between the additive and migraines.",
        "Physical therapy helped my recovery after knee surgery.",
        "Patients with diabetes should monitor their glucose levels daily.",
        "The hospital is testing a new imaging technique for early detection of tumors.",
        "Can anyone recommend a good reference on drug interactions?",
    ],
    "comp.graphics": [
        "I'm looking for source code to convert GIF images to TIFF format.",
        "Ray tracing gives realistic reflections but is very slow on my machine.",
        "The new VGA card supports 1024x768 with 256 colors.",
        "Does anyone have an efficient algorithm for polygon clipping?",
        "Texture mapping requires careful handling of perspective correction.",
        "JPEG compression artifacts are visible at low quality settings.",
        "The rendering package supports Phong shading and bump mapping.",
        "Converting between RGB and HSV color spaces is straightforward.",
        "I need a file format that supports 24-bit color and an alpha channel.",
    ],
    "sci.crypt": [
        "The Clipper chip proposal would give the government access to escrowed keys.",
        "PGP uses RSA for key exchange and IDEA for encrypting the message body.",
        "Key length matters, but a weak random number generator breaks everything.",
        "Public key cryptography lets two parties communicate without a shared secret.",
        "Export restrictions on encryption software hurt American companies.",
        "Is DES still considered secure against a well funded attacker?",
        "You should never reuse a one time pad, that defeats the whole point.",
        "Digital signatures can prove that a file was not modified in transit.",
        "Encrypting your backup files is a good idea if they are stored offsite.",
        "The algorithm was published so that anyone can review its security.",
    ],
    "comp.sys.mac.hardware": [
        "My Quadra won't boot after installing the extra memory.",
        "Is it worth upgrading to a 68040 accelerator card?",
        "The hard drive makes a clicking noise when it spins up.",
        "SCSI termination problems cause strange intermittent failures.",
        "The monitor flickers at higher refresh rates.",
        "I replaced the PRAM battery and the clock now keeps time.",
        "Does the PowerBook support an external keyboard and display?",
        "Copying large files over the network is very slow on my LC.",
    ],
    "misc.forsale": [
        "For sale: laser printer, lightly used, asking 300 dollars or best offer.",
        "Selling my collection of science fiction paperbacks, mostly first editions.",
        "Mountain bike in excellent condition, new tires, price negotiable.",
        "Payment by check or money order, buyer pays shipping.",
        "Wanted: external modem, 14.4k or faster.",
        "Two tickets to the concert on Saturday, face value.",
        "Will ship anywhere in the continental US.",
        "Email me if interested, I will answer all offers.",
    ],
    "biz.finance": [
        "Bitcoin prices fell sharply after the exchange announced new withdrawal limits.",
        "The central bank raised interest rates by a quarter point.",
        "Quarterly earnings beat analyst expectations on strong cloud revenue.",
        "The merger still needs approval from regulators in several countries.",
        "Payment processors are investing heavily in fraud detection.",
        "Small businesses struggle to access credit when banks tighten lending.",
        "The company will pay a dividend of 40 cents per share.",
        "Cryptocurrency wallets should be backed up in a secure location.",
        "Insurance premiums for cyber incidents have risen steadily.",
        "The startup raised 20 million dollars in its latest funding round.",
    ],
    "comp.os.linux": [
        "After upgrading the kernel my network card is no longer detected.",
        "You can recover deleted files from ext2 with debugfs if you act quickly.",
        "Make sure the file permissions allow the daemon to read its configuration.",
        "I wrote a script that backs up my home directory every night with tar.",
        "The X server crashes when I switch virtual consoles.",
        "Use chmod to make the file executable and then run it from the shell.",
        "Mounting the partition read only lets you check the filesystem safely.",
        "The compiler complains about a missing header file when building the module.",
        "Log rotation prevents the system logs from filling the disk.",
    ],
}

FIRST = ["John", "Mary", "David", "Susan", "Robert", "Linda", "Michael", "Karen", "James",
         "Patricia", "Thomas", "Nancy", "Daniel", "Lisa", "Paul", "Helen", "Mark", "Laura"]
LAST = ["Smith", "Johnson", "Brown", "Miller", "Davis", "Wilson", "Moore", "Taylor",
        "Anderson", "Thomas", "Jackson", "White", "Harris", "Martin", "Thompson", "Clark"]
ORGS = ["University of Illinois", "Carnegie Mellon University", "AT&T Bell Laboratories",
        "Sun Microsystems", "MIT", "University of Toronto", "Digital Equipment Corporation",
        "Stanford University", "NASA Ames Research Center", "Hewlett-Packard", "Purdue University"]
SUBJECT_PREFIX = ["", "Re: ", "Re: ", "Question about ", "Summary: ", "Help with "]


def news_post(rng, group):
    first, last = rng.choice(FIRST), rng.choice(LAST)
    host = rng.choice(["cs.cmu.edu", "uiuc.edu", "mit.edu", "att.com", "sun.com", "toronto.edu",
                       "stanford.edu", "hp.com", "purdue.edu"])
    sentences = TOPICS[group]
    body = rng.sample(sentences, rng.randint(3, min(7, len(sentences))))
    subject_words = body[0].split()[: rng.randint(3, 6)]
    lines = [
        "From: {}{}@{} ({} {})".format(first[0].lower(), last.lower(), host, first, last),
        "Subject: {}{}".format(rng.choice(SUBJECT_PREFIX), " ".join(subject_words).rstrip(".,?")),
        "Organization: " + rng.choice(ORGS),
        "Lines: " + str(rng.randint(8, 60)),
        "",
    ]
    if rng.random() < 0.4:
        quoted = rng.choice(sentences)
        lines.append("In article <{}@{}>, someone writes:".format(rng.randint(1000, 99999), host))
        lines.append("> " + quoted)
        lines.append("")
    para = []
    for s in body:
        para.append(s)
        if rng.random() < 0.3:
            lines.append(" ".join(para))
            lines.append("")
            para = []
    if para:
        lines.append(" ".join(para))
    lines.append("")
    lines.append("-- ")
    lines.append("{} {}   {}{}@{}".format(first, last, first[0].lower(), last.lower(), host))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ harvested files

def read_prefix(path):
    with open(path, "rb") as f:
        data = f.read(MAX_DOC_BYTES)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        text = data.decode("utf-8", errors="ignore")
    return text


def pick(rng, pattern_list, count, min_bytes=600):
    paths = set()
    for pattern in pattern_list:
        paths.update(glob.glob(pattern, recursive=True))
    paths = sorted(p for p in paths if os.path.isfile(p) and os.path.getsize(p) >= min_bytes)
    rng.shuffle(paths)
    chosen, seen_names = [], set()
    for p in paths:
        key = os.path.basename(os.path.dirname(p)) + "/" + os.path.basename(p)
        if key in seen_names:
            continue
        seen_names.add(key)
        chosen.append(p)
        if len(chosen) == count:
            break
    return chosen


def shell_scripts():
    out = []
    for p in sorted(glob.glob("/usr/bin/*")):
        try:
            with open(p, "rb") as f:
                head = f.read(32)
        except OSError:
            continue
        if head.startswith(b"#!/bin/sh") or head.startswith(b"#!/bin/bash"):
            out.append(p)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-o", "--out", default="data/corpus")
    ap.add_argument("--seed", type=int, default=1729)
    ap.add_argument("--notes", type=int, default=177)
    ap.add_argument("--posts", type=int, default=130)
    ap.add_argument("--readmes", type=int, default=50)
    ap.add_argument("--code", type=int, default=47)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    ransom_dir = os.path.join(args.out, "ransom")
    benign_dir = os.path.join(args.out, "benign")
    for d in (ransom_dir, benign_dir):
        shutil.rmtree(d, ignore_errors=True)
        os.makedirs(d)

    for i in range(args.notes):
        name = "note_{:03d}_{}".format(i, rng.choice(NOTE_NAMES))
        with open(os.path.join(ransom_dir, name), "w") as f:
            f.write(ransom_note(rng))

    groups = sorted(TOPICS)
    for i in range(args.posts):
        group = groups[i % len(groups)]
        with open(os.path.join(benign_dir, "news_{:03d}_{}.txt".format(i, group)), "w") as f:
            f.write(news_post(rng, group))

    readmes = pick(rng, ["/opt/cargo/registry/src/*/*/README.md",
                         "/usr/lib/node_modules/**/README.md",
                         "/usr/local/lib/python3.10/dist-packages/**/README*"], args.readmes)
    for i, p in enumerate(readmes):
        label = os.path.basename(os.path.dirname(p))
        with open(os.path.join(benign_dir, "readme_{:03d}_{}.md".format(i, label)), "w") as f:
            f.write(read_prefix(p))

    code_sets = [
        (["/usr/lib/python3.10/*.py"], 18, ".py"),
        (["/usr/include/*.h"], 14, ".h"),
        (["/usr/share/cmake-3.22/Modules/*.cmake"], 6, ".cmake"),
        ([], 6, ".sh"),
        (["/usr/lib/node_modules/**/*.html", "/usr/local/lib/python3.10/dist-packages/**/*.html"], 3, ".html"),
    ]
    n = 0
    for patterns, count, ext in code_sets:
        if ext == ".sh":
            paths = shell_scripts()
            rng.shuffle(paths)
            chosen = [p for p in paths if os.path.getsize(p) >= 600][:count]
        else:
            chosen = pick(rng, patterns, count)
        for p in chosen:
            stem = os.path.basename(p).replace(".", "_")
            with open(os.path.join(benign_dir, "code_{:03d}_{}{}".format(n, stem, ext)), "w") as f:
                f.write(read_prefix(p))
            n += 1
    print("ransom:", args.notes, "benign:", args.posts + len(readmes) + n)


if __name__ == "__main__":
    main()
